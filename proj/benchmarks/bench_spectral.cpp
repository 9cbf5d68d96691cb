#include <benchmark/benchmark.h>

#include "graphgeom/prng.hpp"
#include "graphgeom/spectral.hpp"
#include "graphgeom/synth.hpp"

using namespace graphgeom;

static void BM_SpectralDecomposition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 8.0 / n, 42);
    for (auto _ : state) {
        SpectralBasis b = spectral_decomposition(g);
        benchmark::DoNotOptimize(b.eigenvalues);
    }
}
BENCHMARK(BM_SpectralDecomposition)->RangeMultiplier(2)->Range(64, 1024);

static void BM_LapPE(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 8.0 / n, 42);
    const SpectralBasis b = spectral_decomposition(g);
    for (auto _ : state) {
        LapPE pe = lappe(b, 8);
        benchmark::DoNotOptimize(pe.coordinates);
    }
}
BENCHMARK(BM_LapPE)->RangeMultiplier(2)->Range(64, 1024);

static void BM_Propagate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 8.0 / n, 42);
    SplitMix64 rng(7);
    Eigen::MatrixXd h0(n, 16);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 16; ++j) h0(i, j) = rng.next_gaussian();
    for (auto _ : state) {
        Eigen::MatrixXd h = propagate(g, h0, 4);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_Propagate)->RangeMultiplier(2)->Range(64, 1024);

BENCHMARK_MAIN();
