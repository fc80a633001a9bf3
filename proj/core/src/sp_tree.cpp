#include "vsdo/sp_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "vsdo/shortest_paths.hpp"

namespace vsdo {

namespace {

// Children lists in ascending id order (deterministic preorder).
std::vector<std::vector<VertexId>> child_lists(const SpTree& t) {
    std::vector<std::vector<VertexId>> ch(t.parent.size());
    for (VertexId v = 0; v < t.parent.size(); ++v)
        if (t.parent[v] != kNoVertex) ch[t.parent[v]].push_back(v);
    return ch;  // already ascending: v grows
}

}  // namespace

SpTree build_spt(const Digraph& g, VertexId s) {
    ShortestPaths sp = dijkstra(g, s);
    SpTree t;
    t.root = s;
    t.parent = std::move(sp.parent);
    t.dist = std::move(sp.dist);
    const std::size_t n = g.order();
    t.tin.assign(n, std::numeric_limits<std::uint32_t>::max());
    t.tout.assign(n, 0);
    t.covered_count = 0;
    for (VertexId v = 0; v < n; ++v)
        if (t.dist[v].is_finite()) ++t.covered_count;

    auto ch = child_lists(t);
    std::uint32_t clock = 0;
    // Iterative DFS; stack entry = (vertex, next child index).
    std::vector<std::pair<VertexId, std::size_t>> stack;
    stack.reserve(t.covered_count);
    stack.push_back({s, 0});
    t.tin[s] = clock++;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < ch[v].size()) {
            VertexId c = ch[v][i++];
            t.tin[c] = clock++;
            stack.push_back({c, 0});
        } else {
            t.tout[v] = clock++;
            stack.pop_back();
        }
    }
    return t;
}

CentroidSplit centroid_bipartition(const SpTree& t) {
    const std::size_t n = t.parent.size();
    const std::size_t covered = t.covered_count;
    if (covered < 7)
        throw std::invalid_argument("centroid_bipartition: tree too small");

    auto ch = child_lists(t);

    // Subtree sizes over covered vertices, children before parents (by tin).
    std::vector<VertexId> order;
    order.reserve(covered);
    for (VertexId v = 0; v < n; ++v)
        if (t.covered(v)) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return t.tin[a] > t.tin[b]; });
    std::vector<std::uint32_t> size(n, 0);
    for (VertexId v : order) {
        ++size[v];
        if (t.parent[v] != kNoVertex) size[t.parent[v]] += size[v];
    }

    // Centroid: every component of T - z has at most covered/2 vertices.
    VertexId z = kNoVertex;
    for (VertexId v : order) {
        // order is descending tin; scan all, keep smallest qualifying id
        std::uint32_t worst = static_cast<std::uint32_t>(covered - size[v]);
        for (VertexId c : ch[v]) worst = std::max(worst, size[c]);
        if (2ull * worst <= covered && (z == kNoVertex || v < z)) z = v;
    }
    if (z == kNoVertex)
        throw std::logic_error("centroid_bipartition: no centroid found");

    // Components of T - z: one per covered child subtree, plus the remainder
    // holding the root when z != root.
    struct Comp {
        std::uint32_t size;
        VertexId rep;  // child root, or the tree root for the remainder
        bool holds_root;
    };
    std::vector<Comp> comps;
    for (VertexId c : ch[z]) comps.push_back({size[c], c, false});
    if (z != t.root)
        comps.push_back({static_cast<std::uint32_t>(covered - size[z]), t.root, true});
    std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
        return a.size != b.size ? a.size > b.size : a.rep < b.rep;
    });

    // Greedy grouping: biggest first onto the lighter group.
    std::uint64_t weight[2] = {0, 0};
    std::vector<int> group(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        int gsel = weight[0] <= weight[1] ? 0 : 1;
        group[i] = gsel;
        weight[gsel] += comps[i].size;
    }
    int first_group = 0;  // the side that becomes T1 (holds the root)
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i].holds_root) first_group = group[i];
    // z == root: arbitrary deterministic pick — side of the largest component.

    CentroidSplit s;
    s.centroid = z;
    s.in_first.assign(n, 0);
    s.in_second.assign(n, 0);
    s.in_first[z] = s.in_second[z] = 1;

    // Mark each component's subtree on its side.
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::vector<char>& side = group[i] == first_group ? s.in_first : s.in_second;
        if (comps[i].holds_root) continue;  // handled below
        std::vector<VertexId> stack{comps[i].rep};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            side[v] = 1;
            for (VertexId c : ch[v]) stack.push_back(c);
        }
    }
    if (z != t.root) {
        // Remainder component: covered vertices outside subtree(z). It holds
        // the root, so by construction of first_group it lands on in_first.
        for (VertexId v = 0; v < n; ++v)
            if (t.covered(v) && !t.is_ancestor(z, v)) s.in_first[v] = 1;
    }

    // Root path s .. z.
    std::vector<VertexId> path;
    for (VertexId v = z; v != kNoVertex; v = t.parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    s.root_path = std::move(path);
    s.path_pos.assign(n, kNoPos);
    for (std::uint32_t i = 0; i < s.root_path.size(); ++i)
        s.path_pos[s.root_path[i]] = i;
    return s;
}

}  // namespace vsdo
