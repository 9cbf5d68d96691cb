#include <benchmark/benchmark.h>

#include "graphgeom/synth.hpp"
#include "graphgeom/wl.hpp"

using namespace graphgeom;

static void BM_WLRefine(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 6.0 / n, 42);
    const std::vector<int> init(n, 0);
    for (auto _ : state) {
        WLColoring c = wl_refine(g, init, nullptr);
        benchmark::DoNotOptimize(c.colors);
    }
}
BENCHMARK(BM_WLRefine)->RangeMultiplier(4)->Range(64, 1024);

static void BM_DistinguishCommonNeighbor(benchmark::State& state) {
    const Graph a = cycle_graph(static_cast<int>(state.range(0)));
    const Graph b = disjoint_union(cycle_graph(3),
                                   cycle_graph(static_cast<int>(state.range(0)) - 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distinguish(a, b, WLMode::CommonNeighbor));
    }
}
BENCHMARK(BM_DistinguishCommonNeighbor)->Arg(8)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
