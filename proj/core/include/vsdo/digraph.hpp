#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vsdo/types.hpp"

namespace vsdo {

struct Edge {
    VertexId to;
    Weight w;
};

// Directed multigraph over dense vertex ids [0, n). Parallel edges are kept,
// self-loops are dropped on ingest.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n) : out_(n) {}

    std::size_t order() const { return out_.size(); }
    std::size_t edge_count() const { return m_; }

    void add_edge(VertexId u, VertexId v, Weight w);

    std::span<const Edge> out(VertexId u) const {
        return {out_[u].data(), out_[u].size()};
    }

    Weight max_weight() const;

    // Keeps, for every ordered pair (u, v), only the lightest parallel edge.
    void dedup_parallel_min();

private:
    std::vector<std::vector<Edge>> out_;
    std::size_t m_ = 0;
};

}  // namespace vsdo
