#pragma once

#include <string_view>

#include "vsdo/digraph.hpp"

namespace vsdo {

// Seeded instance families. All draws come from std::mt19937_64 reduced by
// modulo (the engine is fully specified by the standard, so outputs are
// identical across platforms; distribution objects are not and are avoided).
//
//   gnp           m random arcs, endpoints uniform, weights uniform [1, W].
//   layered       sqrt(n)-ish layers; every non-source vertex gets one arc
//                 from the previous layer, the rest of the arcs are random
//                 forward arcs. Moderate-depth trees.
//   path_shortcut spine 0->1->...->n-1 of unit arcs plus forward chords
//                 strictly heavier than the spine segment they skip (the
//                 spine stays the unique shortest-path tree, so the tree
//                 path to the centroid is long) and a few backward arcs.
//   grid          sqrt(n) x sqrt(n) right/down lattice, random weights,
//                 plus random extra arcs up to m.
enum class GraphFamily { gnp, layered, path_shortcut, grid };

GraphFamily parse_graph_family(std::string_view name);  // throws on unknown
const char* to_string(GraphFamily f);

struct GenParams {
    GraphFamily family = GraphFamily::gnp;
    std::uint32_t n = 0;
    std::uint64_t m = 0;  // 0 = family default
    Weight max_weight = 10;
    std::uint64_t seed = 0;
};

Digraph generate_graph(const GenParams& params);

}  // namespace vsdo
