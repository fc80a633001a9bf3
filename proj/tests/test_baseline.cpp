#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "vsdo/baseline.hpp"
#include "vsdo/shortest_paths.hpp"

using namespace vsdo;
using baseline::exact_detour_by_interval;
using baseline::exact_detour_distances;
using baseline::exact_ssrp;

namespace {

struct Pieces {
    Digraph g;
    SpTree tree;
    CentroidSplit split;
};

Pieces pieces(Digraph g) {
    SpTree t = build_spt(g, 0);
    CentroidSplit split = centroid_bipartition(t);
    return {std::move(g), std::move(t), std::move(split)};
}

Digraph pure_path(std::uint32_t n) {
    Digraph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1);
    return g;
}

}  // namespace

TEST_CASE("replacement table: triangle example") {
    Digraph g(3);
    g.add_edge(0, 1, 1);  // s -> a
    g.add_edge(1, 2, 1);  // a -> b
    g.add_edge(0, 2, 5);  // s -> b
    auto table = exact_ssrp(g, 0);
    CHECK(table.at(1, 2) == Distance::finite(5));
    CHECK(table.at(2, 1) == Distance::finite(1));
    for (VertexId x = 1; x < 3; ++x) CHECK(table.at(x, 0) == Distance::finite(0));
}

TEST_CASE("replacement table matches path enumeration (n <= 10)") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::uint32_t n = 4 + seed % 7;  // up to 10
        Digraph g = testsup::make_instance(n, 3ull * n, 1 + seed % 6, 500 + seed,
                                           GraphFamily::gnp);
        auto table = exact_ssrp(g, 0);
        for (VertexId x = 1; x < n; ++x)
            for (VertexId t = 0; t < n; ++t)
                CHECK(table.at(x, t) == testsup::enum_min_path(g, 0, t, x));
    }
}

TEST_CASE("replacement distances never undercut the unfaulted distance") {
    Digraph g = testsup::make_instance(20, 80, 10, 77, GraphFamily::gnp);
    auto table = exact_ssrp(g, 0);
    auto plain = dijkstra(g, 0).dist;
    for (VertexId x = 1; x < 20; ++x)
        for (VertexId t = 0; t < 20; ++t) CHECK(table.at(x, t) >= plain[t]);
}

TEST_CASE("exact detours on a pure path: everything past the fault is cut off") {
    Pieces p = pieces(pure_path(9));
    const VertexId fault = p.split.root_path[2];
    auto det = exact_detour_distances(p.g, p.tree, p.split, fault);
    for (VertexId t = 0; t < 9; ++t) {
        if (t < 2)
            CHECK(det[t] == p.tree.dist[t]);  // trivial prefix detours
        else
            CHECK(det[t] == Distance::unreachable());
    }
}

TEST_CASE("exact detours: a single chord is the only candidate") {
    // Path 0..8 plus one chord 1 -> 7 of weight 9.
    Digraph g = pure_path(9);
    g.add_edge(1, 7, 9);
    Pieces p = pieces(std::move(g));
    const VertexId fault = p.split.root_path[3];
    auto det = exact_detour_distances(p.g, p.tree, p.split, fault);
    CHECK(det[7] == Distance::finite(1 + 9));  // tree prefix to 1, then chord
    CHECK(det[5] == Distance::unreachable());
}

TEST_CASE("exact detours match constrained enumeration (n <= 12)") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::uint32_t n = 8 + seed % 5;  // up to 12
        Digraph g = testsup::make_instance(n, 4ull * n, 7, 600 + seed,
                                           GraphFamily::grid);
        auto reach = dijkstra(g, 0).dist;
        bool all = true;
        for (auto d : reach) all = all && d.is_finite();
        if (!all) continue;
        Pieces p = pieces(std::move(g));
        for (std::size_t f = 1; f < p.split.root_path.size(); ++f) {
            const VertexId fault = p.split.root_path[f];
            auto det = exact_detour_distances(p.g, p.tree, p.split, fault);
            for (VertexId t = 0; t < p.g.order(); ++t) {
                if (t == fault) continue;
                CHECK(det[t] == testsup::enum_min_detour(p.g, p.split, fault, t));
            }
        }
    }
}

TEST_CASE("interval oracle: the source's own interval sees only its out-edges") {
    // Source interval = {0} at the singleton level; the only detours leave
    // the trunk directly from the source.
    Digraph g = pure_path(8);
    g.add_edge(0, 6, 20);
    Pieces p = pieces(std::move(g));
    const std::uint32_t top = ceil_log2(std::uint32_t(p.split.root_path.size()));
    auto det = exact_detour_by_interval(p.g, p.tree, p.split, top, 0);
    CHECK(det[6] == Distance::finite(20));
    for (VertexId t = 1; t < 6; ++t) CHECK(det[t] == Distance::unreachable());
}

TEST_CASE("interval oracle: one-vertex interval with a single chord") {
    Digraph g = pure_path(9);
    g.add_edge(2, 8, 4);
    Pieces p = pieces(std::move(g));
    const std::uint32_t top = ceil_log2(std::uint32_t(p.split.root_path.size()));
    auto det = exact_detour_by_interval(p.g, p.tree, p.split, top, 2);
    CHECK(det[8] == Distance::finite(2 + 4));
    CHECK(det[5] == Distance::unreachable());
}

TEST_CASE("interval minima refine the per-fault detour oracle at boundaries") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Digraph g = testsup::make_instance(24, 120, 8, 800 + seed,
                                           GraphFamily::path_shortcut);
        Pieces p = pieces(std::move(g));
        const std::uint32_t pl = std::uint32_t(p.split.root_path.size());
        for (std::uint32_t level = 0; level < ceil_log2(pl) + 1; ++level) {
            for (std::uint32_t j = 0; j + 1 < (1u << level); ++j) {
                DyadicInterval iv = dyadic_interval(level, j, pl);
                if (iv.empty || iv.hi + 1 >= pl) continue;
                const VertexId fault = p.split.root_path[iv.hi + 1];
                auto perity = exact_detour_distances(p.g, p.tree, p.split, fault);
                std::vector<Distance> folded(p.g.order(), Distance::unreachable());
                for (std::uint32_t j2 = 0; j2 <= j; ++j2) {
                    auto one = exact_detour_by_interval(p.g, p.tree, p.split, level, j2);
                    for (VertexId t = 0; t < p.g.order(); ++t)
                        folded[t] = min(folded[t], one[t]);
                }
                for (VertexId t = 0; t < p.g.order(); ++t) {
                    if (t == fault) continue;
                    CHECK(folded[t] == perity[t]);
                }
            }
        }
    }
}

TEST_CASE("jump estimate closes the gap below the centroid") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const std::uint32_t n = 16 + std::uint32_t(seed) * 4;
        Digraph g = testsup::make_instance(n, 5ull * n, 9, 900 + seed,
                                           GraphFamily::grid);
        auto reach = dijkstra(g, 0).dist;
        bool all = true;
        for (auto d : reach) all = all && d.is_finite();
        if (!all) continue;
        Pieces p = pieces(std::move(g));
        auto table = exact_ssrp(p.g, 0);
        const VertexId z = p.split.centroid;
        for (std::size_t f = 1; f < p.split.root_path.size(); ++f) {
            const VertexId fault = p.split.root_path[f];
            auto det = exact_detour_distances(p.g, p.tree, p.split, fault);
            const Distance sz = table.at(fault, z);
            for (VertexId t = 0; t < p.g.order(); ++t) {
                if (!p.split.in_second[t] || t == z) continue;
                Distance jump = Distance::unreachable();
                if (p.tree.dist[t].is_finite() && sz.is_finite())
                    jump = sz + Distance::finite(p.tree.dist[t].value() -
                                                 p.tree.dist[z].value());
                const Distance folded = min(det[t], jump);
                CHECK(folded >= table.at(fault, t));
                CHECK(folded == table.at(fault, t));  // equality below the centroid
            }
        }
    }
}
