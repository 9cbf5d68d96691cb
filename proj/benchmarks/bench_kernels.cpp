#include <benchmark/benchmark.h>

#include "graphgeom/curvature.hpp"
#include "graphgeom/diffusion.hpp"
#include "graphgeom/synth.hpp"

using namespace graphgeom;

static void BM_FormanCurvature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 8.0 / n, 42);
    for (auto _ : state) {
        EdgeScoreMap f = forman_curvature(g);
        benchmark::DoNotOptimize(f.scores);
    }
}
BENCHMARK(BM_FormanCurvature)->RangeMultiplier(4)->Range(64, 4096);

static void BM_CurvatureKernel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 8.0 / n, 42);
    const EdgeScoreMap f = forman_curvature(g);
    for (auto _ : state) {
        TransitionKernel q = curvature_kernel(g, f, WeightingConfig{});
        benchmark::DoNotOptimize(q.matrix);
    }
}
BENCHMARK(BM_CurvatureKernel)->RangeMultiplier(2)->Range(64, 512);

static void BM_LocalCurvatureProfile(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 8.0 / n, 42);
    const EdgeScoreMap f = forman_curvature(g);
    for (auto _ : state) {
        Eigen::MatrixXd lcp = local_curvature_profile(g, f);
        benchmark::DoNotOptimize(lcp);
    }
}
BENCHMARK(BM_LocalCurvatureProfile)->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
