#pragma once

#include <vector>

#include "vsdo/digraph.hpp"
#include "vsdo/types.hpp"

namespace vsdo {

struct ShortestPaths {
    std::vector<Distance> dist;
    // Predecessor on a canonical shortest-path tree; kNoVertex for the source
    // and for unreachable vertices. Among equal-length alternatives the
    // smallest predecessor id wins.
    std::vector<VertexId> parent;
};

ShortestPaths dijkstra(const Digraph& g, VertexId src);

// Dijkstra on g - banned (banned vertex removed). banned must differ from src.
ShortestPaths dijkstra_avoiding(const Digraph& g, VertexId src, VertexId banned);

// dist[v] = length of the shortest src->v path all of whose intermediate
// vertices satisfy interior (src and the destination itself exempt).
// Realized by never expanding a settled non-interior vertex other than src.
std::vector<Distance> restricted_dijkstra(const Digraph& g, VertexId src,
                                          const std::vector<char>& interior);

}  // namespace vsdo
