#pragma once

#include <cstdint>
#include <vector>

#include "vsdo/digraph.hpp"
#include "vsdo/types.hpp"

namespace vsdo {

// Shortest-path tree with preorder stamps for O(1) ancestor tests.
// Vertices unreachable from the root are uncovered: dist Unreachable,
// parent kNoVertex, tin = UINT32_MAX / tout = 0 (never an ancestor).
struct SpTree {
    VertexId root = kNoVertex;
    std::vector<VertexId> parent;
    std::vector<Distance> dist;
    std::vector<std::uint32_t> tin, tout;
    std::size_t covered_count = 0;

    bool covered(VertexId v) const { return dist[v].is_finite(); }

    // Ancestor-or-self within the tree.
    bool is_ancestor(VertexId a, VertexId b) const {
        return tin[a] <= tin[b] && tout[b] <= tout[a];
    }
};

SpTree build_spt(const Digraph& g, VertexId s);

// Split of the tree at a centroid z into edge-disjoint subtrees: first side
// contains the root s (and z), second side is rooted at z. Both sides keep
// between N/3 and ceil(2N/3) covered vertices for N >= 7.
struct CentroidSplit {
    VertexId centroid = kNoVertex;
    std::vector<char> in_first;   // side containing s (includes z)
    std::vector<char> in_second;  // side rooted at z (includes z)
    std::vector<VertexId> root_path;    // tree path s .. z
    std::vector<std::uint32_t> path_pos;  // position on root_path, else kNoPos

    VertexId source() const { return root_path.front(); }
    bool on_path(VertexId v) const { return path_pos[v] != kNoPos; }
};

// Requires covered_count >= 7; throws std::invalid_argument otherwise.
CentroidSplit centroid_bipartition(const SpTree& t);

}  // namespace vsdo
