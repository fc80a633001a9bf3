#include "vsdo/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vsdo/shortest_paths.hpp"

namespace vsdo {

BuildConfig make_build_config(double eps, std::size_t n, SzProvider provider) {
    if (!(eps > 0.0) || !(eps <= 1.0))
        throw std::invalid_argument("eps must lie in (0, 1]");
    const double budget = std::max<std::uint32_t>(1, ceil_log2(n));
    BuildConfig cfg;
    cfg.eps = eps;
    cfg.level_eps = eps / (3.0 * budget);
    cfg.round_eps = cfg.level_eps / (2.0 * budget);
    cfg.round_eps_fixed = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::floor(cfg.round_eps * double(kRoundEpsOne))));
    cfg.provider = provider;
    return cfg;
}

std::int64_t OracleNode::local_of(VertexId global) const {
    auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
    if (it == to_global.end() || *it != global) return -1;
    return it - to_global.begin();
}

Digraph far_side_graph(const Digraph& g, const CentroidSplit& split) {
    const std::size_t n = g.order();
    const VertexId z = split.centroid;
    const VertexId s = split.source();
    auto far = [&](VertexId v) { return split.in_second[v] && v != z; };

    Digraph out(n);
    for (VertexId u = 0; u < n; ++u) {
        if (!far(u)) continue;
        for (const Edge& e : g.out(u))
            if (far(e.to)) out.add_edge(u, e.to, e.w);
    }
    std::vector<Distance> reach = restricted_dijkstra(g, s, split.in_first);
    for (VertexId u = 0; u < n; ++u)
        if (far(u) && reach[u].is_finite()) out.add_edge(s, u, reach[u].value());
    return out;
}

Digraph near_side_graph(const Digraph& g, const SpTree& t, const CentroidSplit& split,
                        const DetourIndex& detours) {
    const std::size_t n = g.order();
    const VertexId z = split.centroid;

    Digraph out(n);
    for (VertexId u = 0; u < n; ++u) {
        if (!split.in_first[u]) continue;
        for (const Edge& e : g.out(u))
            if (split.in_first[e.to]) out.add_edge(u, e.to, e.w);
    }

    std::vector<char> interior(n, 0);
    for (VertexId v = 0; v < n; ++v) interior[v] = split.in_second[v] && v != z;
    std::vector<Distance> through = restricted_dijkstra(g, z, interior);
    for (VertexId u = 0; u < n; ++u)
        if (split.in_first[u] && u != z && through[u].is_finite())
            out.add_edge(z, u, through[u].value());

    // Branch->rejoin shortcuts for root-path targets; seed entries (branch ==
    // target) would be zero-weight self-loops and are filtered here.
    for (std::uint32_t level = 0; level < detours.level_count; ++level) {
        for (VertexId vc : split.root_path) {
            for (const RoundEntry& e : detours.entries[level][vc]) {
                if (e.branch == vc) continue;
                assert(e.length >= t.dist[e.branch].value());
                out.add_edge(e.branch, vc, e.length - t.dist[e.branch].value());
            }
        }
    }
    out.dedup_parallel_min();
    return out;
}

namespace {

// Compacts `g` onto the given sorted local vertex subset; new ids are ranks.
std::pair<Digraph, std::vector<VertexId>> compact_subgraph(
    const Digraph& g, const std::vector<VertexId>& members,
    const std::vector<VertexId>& to_global) {
    std::vector<VertexId> rank(g.order(), kNoVertex);
    for (std::size_t i = 0; i < members.size(); ++i) rank[members[i]] = VertexId(i);
    Digraph out(members.size());
    std::vector<VertexId> globals(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        globals[i] = to_global[members[i]];
        for (const Edge& e : g.out(members[i]))
            if (rank[e.to] != kNoVertex) out.add_edge(VertexId(i), rank[e.to], e.w);
    }
    return {std::move(out), std::move(globals)};
}

}  // namespace

Oracle Oracle::build(const Digraph& g, VertexId source, double eps, SzProvider provider) {
    const std::size_t n = g.order();
    if (source >= n) throw std::out_of_range("build: source out of range");

    Weight maxw = 1;
    for (VertexId u = 0; u < n; ++u)
        for (const Edge& e : g.out(u)) {
            if (e.w < 1) throw std::invalid_argument("build: edge weights must be >= 1");
            maxw = std::max(maxw, e.w);
        }
    using u128 = unsigned __int128;
    if (u128(n) * u128(n) * u128(maxw) >
        u128(std::numeric_limits<std::int64_t>::max()))
        throw std::invalid_argument("build: n*n*W exceeds the 64-bit distance budget");

    Oracle o;
    o.cfg_ = make_build_config(eps, n, provider);
    o.n_ = n;
    o.m_ = g.edge_count();
    o.maxw_ = maxw;
    o.source_ = source;

    // Root covers the subgraph reachable from the source; everything else is
    // answered Unreachable at the top.
    std::vector<Distance> reach = dijkstra(g, source).dist;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v)
        if (reach[v].is_finite()) members.push_back(v);
    std::vector<VertexId> identity(n);
    for (VertexId v = 0; v < n; ++v) identity[v] = v;
    auto [root_graph, root_globals] = compact_subgraph(g, members, identity);
    o.build_node(1, std::move(root_graph), std::move(root_globals));
    return o;
}

void Oracle::build_node(std::uint64_t id, Digraph graph, std::vector<VertexId> to_global) {
    OracleNode node;
    node.id = id;
    const std::size_t k = graph.order();

    const std::int64_t s_local_i =
        std::lower_bound(to_global.begin(), to_global.end(), source_) - to_global.begin();
    assert(s_local_i >= 0 && std::size_t(s_local_i) < k && to_global[s_local_i] == source_);
    const VertexId s_local = VertexId(s_local_i);

    SpTree t = build_spt(graph, s_local);
    node.tree_dist = t.dist;
    node.tin = t.tin;
    node.tout = t.tout;
    node.to_global = to_global;

    if (k <= cfg_.leaf_size) {
        node.leaf = true;
        node.graph = std::move(graph);
        nodes_.emplace(id, std::move(node));
        return;
    }
    assert(t.covered_count == k);  // recursion sides stay reachable

    CentroidSplit split = centroid_bipartition(t);
    DetourIndex detours =
        build_detour_index(graph, t, split, cfg_.round_eps, cfg_.round_eps_fixed);
    node.replacement =
        build_centroid_replacement_table(graph, t, split, cfg_.provider, &detours);

    Digraph near = near_side_graph(graph, t, split, detours);
    Digraph far = far_side_graph(graph, split);

    node.centroid = split.centroid;
    node.root_path = split.root_path;
    node.path_pos = split.path_pos;
    node.in_child1 = split.in_first;
    node.in_child2.assign(k, 0);
    for (VertexId v = 0; v < k; ++v)
        node.in_child2[v] = split.in_second[v] && v != split.centroid;
    node.in_child2[s_local] = 1;

    std::vector<VertexId> side1, side2;
    for (VertexId v = 0; v < k; ++v) {
        if (node.in_child1[v]) side1.push_back(v);
        if (node.in_child2[v]) side2.push_back(v);
    }
    auto [g1, globals1] = compact_subgraph(near, side1, to_global);
    auto [g2, globals2] = compact_subgraph(far, side2, to_global);

    node.detours = std::move(detours);
    nodes_.emplace(id, std::move(node));

    build_node(2 * id, std::move(g1), std::move(globals1));
    build_node(2 * id + 1, std::move(g2), std::move(globals2));
}

Distance Oracle::query(VertexId x, VertexId t, QueryStats* stats) const {
    if (x >= n_ || t >= n_) throw std::out_of_range("query: vertex out of range");
    if (x == source_) throw std::invalid_argument("query: the source cannot fail");
    if (t == source_) return Distance::finite(0);
    if (x == t) return Distance::unreachable();

    Distance best = Distance::unreachable();
    std::uint64_t cur = 1;
    while (true) {
        const OracleNode& node = nodes_.at(cur);
        if (stats) ++stats->nodes_visited;

        const std::int64_t tl = node.local_of(t);
        if (tl < 0 || !node.tree_dist[tl].is_finite()) return best;
        const std::int64_t xl = node.local_of(x);
        if (xl < 0 || !node.is_ancestor_local(VertexId(xl), VertexId(tl)))
            return min(best, node.tree_dist[tl]);

        if (node.leaf) {
            const VertexId sl = VertexId(node.local_of(source_));
            Distance d = dijkstra_avoiding(node.graph, sl, VertexId(xl)).dist[tl];
            return min(best, d);
        }

        const std::uint32_t xpos = node.path_pos[xl];
        if (xpos != kNoPos && node.in_child2[tl]) {
            if (stats) ++stats->trunk_calls;
            Distance d = detour_query_at(node.detours, xpos, VertexId(tl));
            const Distance dz = node.tree_dist[node.centroid];
            const Distance dt = node.tree_dist[tl];
            assert(dt.is_finite() && dz.is_finite() && dt.value() >= dz.value());
            d = min(d, node.replacement[xpos] + Distance::finite(dt.value() - dz.value()));
            return min(best, d);
        }
        if (node.in_child1[xl] && node.in_child1[tl]) {
            if (xpos != kNoPos) {
                if (stats) ++stats->detour_calls;
                best = min(best, detour_query_at(node.detours, xpos, VertexId(tl)));
            }
            cur = 2 * cur;
            continue;
        }
        if (node.in_child2[xl] && node.in_child2[tl]) {
            cur = 2 * cur + 1;
            continue;
        }
        throw std::logic_error("query: unroutable pair");  // excluded by the split
    }
}

std::uint32_t Oracle::depth() const {
    std::uint32_t d = 0;
    for (const auto& [id, node] : nodes_)
        d = std::max(d, static_cast<std::uint32_t>(std::bit_width(id) - 1));
    return d;
}

std::size_t Oracle::total_detour_entries() const {
    std::size_t total = 0;
    for (const auto& [id, node] : nodes_) total += node.detours.total_entries();
    return total;
}

}  // namespace vsdo
