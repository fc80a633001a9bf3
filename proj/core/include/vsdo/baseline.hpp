#pragma once

#include <vector>

#include "vsdo/digraph.hpp"
#include "vsdo/progressive.hpp"
#include "vsdo/sp_tree.hpp"
#include "vsdo/types.hpp"

namespace vsdo {
namespace baseline {

// Exact single-source replacement distances: at(x, t) = dist in g - x from
// the fixed source to t, for every fault x != source. The source's own row
// holds the unfaulted distances. Brute force (one Dijkstra per fault); used
// only by tests and the verify command, never by the oracle.
class SsrpTable {
public:
    SsrpTable(std::size_t n) : n_(n), d_(n * n, Distance::unreachable()) {}

    Distance at(VertexId fault, VertexId target) const {
        return d_[std::size_t(fault) * n_ + target];
    }
    Distance& at(VertexId fault, VertexId target) {
        return d_[std::size_t(fault) * n_ + target];
    }
    std::size_t order() const { return n_; }

private:
    std::size_t n_;
    std::vector<Distance> d_;
};

SsrpTable exact_ssrp(const Digraph& g, VertexId s);

// Exact shortest detour lengths for one root-path fault: removes root-path
// edges, in-edges of positions before the fault, out-edges of positions
// after it and the fault itself, then runs Dijkstra from a super-source
// wired to every pre-fault position at its tree distance.
std::vector<Distance> exact_detour_distances(const Digraph& g, const SpTree& t,
                                             const CentroidSplit& split,
                                             VertexId fault);

// Exact minimum detour length per target over detours branching inside one
// dyadic interval: materializes the round graph and runs plain Dijkstra.
std::vector<Distance> exact_detour_by_interval(const Digraph& g, const SpTree& t,
                                               const CentroidSplit& split,
                                               std::uint32_t level,
                                               std::uint32_t round);

}  // namespace baseline
}  // namespace vsdo
