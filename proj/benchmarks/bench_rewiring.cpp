#include <benchmark/benchmark.h>

#include "graphgeom/rewiring.hpp"
#include "graphgeom/synth.hpp"

using namespace graphgeom;

static void BM_RewireStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 6.0 / n, 42);
    RewiringConfig cfg;
    cfg.prune_fraction = 0.02;
    cfg.knn_k = 1;
    cfg.pe_dims = 8;
    for (auto _ : state) {
        auto [result, rec] = rewire_step(g, cfg);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_RewireStep)->RangeMultiplier(2)->Range(64, 512);

static void BM_RewireUntilStable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 2.0 / n, 42);
    RewiringConfig cfg;
    cfg.prune_fraction = 0.02;
    cfg.knn_k = 0;
    cfg.mode = RewiringConfig::Mode::Iterate;
    for (auto _ : state) {
        auto [result, report] = rewire_until_stable(g, cfg);
        benchmark::DoNotOptimize(report.steps);
    }
}
BENCHMARK(BM_RewireUntilStable)->RangeMultiplier(2)->Range(64, 512);

BENCHMARK_MAIN();
