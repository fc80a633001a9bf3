#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "vsdo/digraph.hpp"
#include "vsdo/pathfault.hpp"
#include "vsdo/progressive.hpp"
#include "vsdo/sp_tree.hpp"
#include "vsdo/types.hpp"

namespace vsdo {

// Tolerances derived once from the input size and reused unchanged in every
// recursion node: level_eps = eps / (3*ceil(log2 n)) absorbs the per-level
// error accumulation, round_eps = level_eps / (2*ceil(log2 n)) drives the
// progressive activation threshold (also kept as 32-bit fixed point so the
// predicate is exact in integers).
struct BuildConfig {
    double eps = 0.0;
    double level_eps = 0.0;
    double round_eps = 0.0;
    std::uint64_t round_eps_fixed = 0;
    std::uint32_t leaf_size = 6;
    SzProvider provider = SzProvider::exact;
};

BuildConfig make_build_config(double eps, std::size_t n, SzProvider provider);

struct QueryStats {
    std::uint32_t nodes_visited = 0;
    std::uint32_t detour_calls = 0;
    std::uint32_t trunk_calls = 0;
};

// One recursion node. Vertices are stored in a compact local id space; the
// sorted to_global table maps back to input ids (local id = rank, so the
// mapping is monotone). Non-leaf nodes keep the split, the detour index and
// the replacement table; only leaves keep their graph (queried by a fresh
// Dijkstra on demand).
struct OracleNode {
    std::uint64_t id = 0;
    bool leaf = false;
    std::vector<VertexId> to_global;

    std::vector<Distance> tree_dist;
    std::vector<std::uint32_t> tin, tout;

    VertexId centroid = kNoVertex;
    std::vector<VertexId> root_path;
    std::vector<std::uint32_t> path_pos;
    std::vector<char> in_child1, in_child2;
    DetourIndex detours;
    std::vector<Distance> replacement;

    Digraph graph;

    std::size_t size() const { return to_global.size(); }

    // Local id of a global vertex, or -1 if the vertex is not in this node.
    std::int64_t local_of(VertexId global) const;

    bool is_ancestor_local(VertexId a, VertexId b) const {
        return tin[a] <= tin[b] && tout[b] <= tout[a];
    }
};

// Far-side recursion graph: induced subgraph on the second split side minus
// the centroid, plus the source with one shortcut edge (s, u) per far-side
// vertex u, weighted by the near-side-interior restricted distance.
// Returned over the same id space as g; vertices off the side are isolated.
Digraph far_side_graph(const Digraph& g, const CentroidSplit& split);

// Near-side recursion graph: induced subgraph on the first split side, plus
// centroid detour edges (z, u) weighted by far-side-interior restricted
// distances, plus branch->rejoin shortcut edges harvested from the detour
// index (weight = recorded length minus the branch's tree distance).
// Parallel edges are deduplicated keeping the lightest.
Digraph near_side_graph(const Digraph& g, const SpTree& t, const CentroidSplit& split,
                        const DetourIndex& detours);

class Oracle;
void save_oracle(const Oracle& o, std::ostream& out);
Oracle load_oracle(std::istream& in);

// (1+eps)-approximate single-source vertex-fault distance oracle. query(x,t)
// answers dist from the source to t in g - x within a (1+eps) factor, with
// Unreachable agreeing exactly. Immutable after build/load; queries use
// per-call scratch only and are safe to run concurrently.
class Oracle {
public:
    static Oracle build(const Digraph& g, VertexId source, double eps,
                        SzProvider provider = SzProvider::exact);

    Distance query(VertexId x, VertexId t, QueryStats* stats = nullptr) const;

    const BuildConfig& config() const { return cfg_; }
    std::uint64_t input_order() const { return n_; }
    std::uint64_t input_edges() const { return m_; }
    Weight input_max_weight() const { return maxw_; }
    VertexId source() const { return source_; }
    const std::map<std::uint64_t, OracleNode>& nodes() const { return nodes_; }

    std::uint32_t depth() const;
    std::size_t total_detour_entries() const;

private:
    Oracle() = default;
    void build_node(std::uint64_t id, Digraph graph, std::vector<VertexId> to_global);

    friend void save_oracle(const Oracle& o, std::ostream& out);
    friend Oracle load_oracle(std::istream& in);

    BuildConfig cfg_;
    std::uint64_t n_ = 0, m_ = 0;
    Weight maxw_ = 1;
    VertexId source_ = kNoVertex;
    std::map<std::uint64_t, OracleNode> nodes_;
};

}  // namespace vsdo
