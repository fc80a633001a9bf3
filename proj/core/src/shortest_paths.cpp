#include "vsdo/shortest_paths.hpp"

#include <queue>
#include <stdexcept>
#include <utility>

namespace vsdo {

namespace {

using HeapItem = std::pair<std::uint64_t, VertexId>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

// One worker covers all three public variants. banned == kNoVertex disables
// vertex removal; interior == nullptr disables the expansion restriction.
ShortestPaths run(const Digraph& g, VertexId src, VertexId banned,
                  const std::vector<char>* interior) {
    const std::size_t n = g.order();
    if (src >= n) throw std::out_of_range("dijkstra: source out of range");
    if (banned == src) throw std::invalid_argument("dijkstra: source cannot be removed");

    ShortestPaths r;
    r.dist.assign(n, Distance::unreachable());
    r.parent.assign(n, kNoVertex);
    if (banned != kNoVertex && banned >= n)
        throw std::out_of_range("dijkstra: banned vertex out of range");

    r.dist[src] = Distance::finite(0);
    MinHeap heap;
    heap.push({0, src});
    std::vector<char> settled(n, 0);

    while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (settled[u] || du != r.dist[u].raw()) continue;  // stale entry
        settled[u] = 1;
        if (interior && u != src && !(*interior)[u]) continue;  // terminal only
        for (const Edge& e : g.out(u)) {
            if (e.to == banned) continue;
            Distance cand = r.dist[u] + e.w;
            if (cand < r.dist[e.to]) {
                r.dist[e.to] = cand;
                r.parent[e.to] = u;
                heap.push({cand.raw(), e.to});
            } else if (cand == r.dist[e.to] && cand.is_finite() && u < r.parent[e.to]) {
                r.parent[e.to] = u;  // canonical tie-break: smallest predecessor
            }
        }
    }
    return r;
}

}  // namespace

ShortestPaths dijkstra(const Digraph& g, VertexId src) {
    return run(g, src, kNoVertex, nullptr);
}

ShortestPaths dijkstra_avoiding(const Digraph& g, VertexId src, VertexId banned) {
    return run(g, src, banned, nullptr);
}

std::vector<Distance> restricted_dijkstra(const Digraph& g, VertexId src,
                                          const std::vector<char>& interior) {
    if (interior.size() != g.order())
        throw std::invalid_argument("restricted_dijkstra: predicate size mismatch");
    return run(g, src, kNoVertex, &interior).dist;
}

}  // namespace vsdo
