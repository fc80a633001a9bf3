#include "vsdo/baseline.hpp"

#include <stdexcept>

#include "vsdo/shortest_paths.hpp"

namespace vsdo {
namespace baseline {

SsrpTable exact_ssrp(const Digraph& g, VertexId s) {
    const std::size_t n = g.order();
    SsrpTable table(n);
    for (VertexId x = 0; x < n; ++x) {
        ShortestPaths sp = x == s ? dijkstra(g, s) : dijkstra_avoiding(g, s, x);
        for (VertexId t = 0; t < n; ++t) table.at(x, t) = sp.dist[t];
    }
    return table;
}

namespace {

bool path_edge(const CentroidSplit& split, VertexId u, VertexId v) {
    const std::uint32_t pu = split.path_pos[u], pv = split.path_pos[v];
    return pu != kNoPos && pv != kNoPos && pv == pu + 1;
}

// Shared fault-graph shape: positions <= boundary accept no relaxation and
// are fed from the super-source only; positions > boundary expand nothing;
// root-path edges are gone. `banned` optionally removes one vertex.
std::vector<Distance> super_source_run(const Digraph& g, const SpTree& t,
                                       const CentroidSplit& split,
                                       std::uint32_t boundary, std::uint32_t seed_lo,
                                       std::uint32_t seed_hi, VertexId banned) {
    const std::size_t n = g.order();
    Digraph h(n + 1);
    const VertexId super = static_cast<VertexId>(n);
    for (VertexId u = 0; u < n; ++u) {
        if (u == banned) continue;
        const std::uint32_t pu = split.path_pos[u];
        if (pu != kNoPos && pu > boundary) continue;  // out-edges removed
        for (const Edge& e : g.out(u)) {
            if (e.to == banned) continue;
            const std::uint32_t pv = split.path_pos[e.to];
            if (pv != kNoPos && pv <= boundary) continue;  // in-edges removed
            if (path_edge(split, u, e.to)) continue;
            h.add_edge(u, e.to, e.w);
        }
    }
    for (std::uint32_t q = seed_lo; q <= seed_hi; ++q) {
        const VertexId u = split.root_path[q];
        h.add_edge(super, u, t.dist[u].value());
    }
    std::vector<Distance> dist = dijkstra(h, super).dist;
    dist.resize(n);
    return dist;
}

}  // namespace

std::vector<Distance> exact_detour_distances(const Digraph& g, const SpTree& t,
                                             const CentroidSplit& split,
                                             VertexId fault) {
    const std::uint32_t f = split.path_pos[fault];
    if (f == kNoPos || f == 0)
        throw std::invalid_argument("exact_detour_distances: bad fault vertex");
    return super_source_run(g, t, split, f - 1, 0, f - 1, fault);
}

std::vector<Distance> exact_detour_by_interval(const Digraph& g, const SpTree& t,
                                               const CentroidSplit& split,
                                               std::uint32_t level,
                                               std::uint32_t round) {
    const std::uint32_t p = static_cast<std::uint32_t>(split.root_path.size());
    DyadicInterval iv = dyadic_interval(level, round, p);
    if (iv.empty) return std::vector<Distance>(g.order(), Distance::unreachable());
    return super_source_run(g, t, split, iv.hi, iv.lo, iv.hi, kNoVertex);
}

}  // namespace baseline
}  // namespace vsdo
