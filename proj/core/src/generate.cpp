#include "vsdo/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vsdo {

GraphFamily parse_graph_family(std::string_view name) {
    if (name == "gnp") return GraphFamily::gnp;
    if (name == "layered") return GraphFamily::layered;
    if (name == "path-shortcut") return GraphFamily::path_shortcut;
    if (name == "grid") return GraphFamily::grid;
    throw std::invalid_argument("unknown graph family: " + std::string(name));
}

const char* to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::gnp: return "gnp";
        case GraphFamily::layered: return "layered";
        case GraphFamily::path_shortcut: return "path-shortcut";
        case GraphFamily::grid: return "grid";
    }
    return "?";
}

namespace {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t bound) { return engine() % bound; }
    Weight weight(Weight maxw) { return 1 + below(maxw); }
};

Digraph gen_gnp(std::uint32_t n, std::uint64_t m, Weight maxw, Rng& rng) {
    Digraph g(n);
    if (n < 2) return g;
    for (std::uint64_t i = 0; i < m; ++i) {
        VertexId u = VertexId(rng.below(n));
        VertexId v = VertexId(rng.below(n));
        while (v == u) v = VertexId(rng.below(n));
        g.add_edge(u, v, rng.weight(maxw));
    }
    return g;
}

Digraph gen_layered(std::uint32_t n, std::uint64_t m, Weight maxw, Rng& rng) {
    Digraph g(n);
    if (n < 2) return g;
    const std::uint32_t width =
        std::max<std::uint32_t>(1, std::uint32_t(std::sqrt(double(n))));
    auto layer_of = [&](VertexId v) { return v / width; };
    const std::uint32_t layers = (n + width - 1) / width;
    // One incoming arc from the previous layer keeps every vertex reachable.
    for (VertexId v = width; v < n; ++v) {
        std::uint32_t prev = layer_of(v) - 1;
        VertexId lo = prev * width;
        VertexId hi = std::min<VertexId>(lo + width, n);
        g.add_edge(VertexId(lo + rng.below(hi - lo)), v, rng.weight(maxw));
    }
    for (VertexId v = 1; v < std::min<VertexId>(width, n); ++v)
        g.add_edge(0, v, rng.weight(maxw));
    while (g.edge_count() < m && layers >= 2) {
        std::uint32_t from_layer = std::uint32_t(rng.below(layers - 1));
        VertexId lo = from_layer * width;
        VertexId hi = std::min<VertexId>(lo + width, n);
        VertexId u = VertexId(lo + rng.below(hi - lo));
        VertexId lo2 = (from_layer + 1) * width;
        VertexId hi2 = std::min<VertexId>(lo2 + width, n);
        if (lo2 >= n) continue;
        VertexId v = VertexId(lo2 + rng.below(hi2 - lo2));
        g.add_edge(u, v, rng.weight(maxw));
    }
    return g;
}

Digraph gen_path_shortcut(std::uint32_t n, std::uint64_t m, Weight maxw, Rng& rng) {
    Digraph g(n);
    if (n < 2) return g;
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1);
    while (g.edge_count() < m) {
        VertexId u = VertexId(rng.below(n));
        VertexId v = VertexId(rng.below(n));
        if (u == v) continue;
        if (u < v && rng.below(8) != 0) {
            // Forward chord strictly heavier than the spine segment it skips.
            g.add_edge(u, v, Weight(v - u) + rng.weight(maxw));
        } else {
            g.add_edge(std::max(u, v), std::min(u, v), rng.weight(maxw));
        }
    }
    return g;
}

Digraph gen_grid(std::uint32_t n, std::uint64_t m, Weight maxw, Rng& rng) {
    Digraph g(n);
    if (n < 2) return g;
    const std::uint32_t cols =
        std::max<std::uint32_t>(1, std::uint32_t(std::sqrt(double(n))));
    for (VertexId v = 0; v < n; ++v) {
        if ((v % cols) + 1 < cols && v + 1 < n) g.add_edge(v, v + 1, rng.weight(maxw));
        if (v + cols < n) g.add_edge(v, v + cols, rng.weight(maxw));
    }
    while (g.edge_count() < m) {
        VertexId u = VertexId(rng.below(n));
        VertexId v = VertexId(rng.below(n));
        if (u != v) g.add_edge(u, v, rng.weight(maxw));
    }
    return g;
}

}  // namespace

Digraph generate_graph(const GenParams& params) {
    if (params.n == 0) throw std::invalid_argument("generate_graph: n must be > 0");
    if (params.max_weight < 1)
        throw std::invalid_argument("generate_graph: max weight must be >= 1");
    Rng rng(params.seed);
    std::uint64_t m = params.m;
    if (m == 0) m = 4ull * params.n;  // family default density
    switch (params.family) {
        case GraphFamily::gnp: return gen_gnp(params.n, m, params.max_weight, rng);
        case GraphFamily::layered: return gen_layered(params.n, m, params.max_weight, rng);
        case GraphFamily::path_shortcut:
            return gen_path_shortcut(params.n, m, params.max_weight, rng);
        case GraphFamily::grid: return gen_grid(params.n, m, params.max_weight, rng);
    }
    throw std::logic_error("generate_graph: bad family");
}

}  // namespace vsdo
