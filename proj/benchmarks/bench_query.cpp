#include <benchmark/benchmark.h>

#include <random>

#include "vsdo/generate.hpp"
#include "vsdo/oracle.hpp"
#include "vsdo/shortest_paths.hpp"

using namespace vsdo;

namespace {

Digraph instance(std::uint32_t n, GraphFamily family) {
    GenParams p;
    p.family = family;
    p.n = n;
    p.m = 4ull * n;
    p.max_weight = 1000;
    p.seed = 11;
    return generate_graph(p);
}

void BM_Query(benchmark::State& state) {
    const auto n = std::uint32_t(state.range(0));
    const GraphFamily fam =
        state.range(1) ? GraphFamily::path_shortcut : GraphFamily::gnp;
    Digraph g = instance(n, fam);
    Oracle o = Oracle::build(g, 0, 0.25, SzProvider::fast);
    std::mt19937_64 rng(3);
    for (auto _ : state) {
        VertexId x = VertexId(1 + rng() % (n - 1));
        VertexId t = VertexId(rng() % n);
        benchmark::DoNotOptimize(o.query(x, t).raw());
    }
}

// Plain full Dijkstra as the per-query cost the oracle amortizes away.
void BM_DijkstraFullScan(benchmark::State& state) {
    Digraph g = instance(std::uint32_t(state.range(0)), GraphFamily::gnp);
    for (auto _ : state) {
        auto sp = dijkstra(g, 0);
        benchmark::DoNotOptimize(sp.dist.back().raw());
    }
}

}  // namespace

BENCHMARK(BM_Query)
    ->ArgsProduct({{1000, 4000, 16000}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DijkstraFullScan)->Arg(1000)->Arg(4000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
