#include <benchmark/benchmark.h>

#include "vsdo/generate.hpp"
#include "vsdo/oracle.hpp"
#include "vsdo/serialize.hpp"

using namespace vsdo;

namespace {

Digraph instance(std::uint32_t n) {
    GenParams p;
    p.family = GraphFamily::gnp;
    p.n = n;
    p.m = 4ull * n;
    p.max_weight = 1000;
    p.seed = 7;
    return generate_graph(p);
}

void BM_Build(benchmark::State& state) {
    const auto n = std::uint32_t(state.range(0));
    const SzProvider prov = state.range(1) ? SzProvider::fast : SzProvider::exact;
    Digraph g = instance(n);
    for (auto _ : state) {
        Oracle o = Oracle::build(g, 0, 0.25, prov);
        benchmark::DoNotOptimize(o.nodes().size());
    }
    state.SetComplexityN(n);
}

void BM_Serialize(benchmark::State& state) {
    Digraph g = instance(std::uint32_t(state.range(0)));
    Oracle o = Oracle::build(g, 0, 0.25, SzProvider::fast);
    for (auto _ : state) {
        std::string bytes = serialize_oracle(o);
        benchmark::DoNotOptimize(bytes.size());
    }
}

void BM_Deserialize(benchmark::State& state) {
    Digraph g = instance(std::uint32_t(state.range(0)));
    std::string bytes = serialize_oracle(Oracle::build(g, 0, 0.25, SzProvider::fast));
    for (auto _ : state) {
        Oracle o = deserialize_oracle(bytes);
        benchmark::DoNotOptimize(o.nodes().size());
    }
}

}  // namespace

BENCHMARK(BM_Build)
    ->ArgsProduct({{1000, 2000, 4000, 8000}, {0, 1}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNLogN);
BENCHMARK(BM_Serialize)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Deserialize)->Arg(4000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
