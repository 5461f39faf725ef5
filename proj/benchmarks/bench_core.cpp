#include <benchmark/benchmark.h>

#include "svtail/bounds.hpp"
#include "svtail/ensembles.hpp"
#include "svtail/harness.hpp"
#include "svtail/rng.hpp"
#include "svtail/spectra.hpp"
#include "svtail/stats.hpp"

using namespace svtail;

static void BM_LargestSingularValue(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(42);
    const DenseMatrix b = sample_iid_matrix(n, n, SubGaussianModel::standard_gaussian(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(largest_singular_value(b));
    }
}
BENCHMARK(BM_LargestSingularValue)->Arg(8)->Arg(32)->Arg(128);

static void BM_SymmetricEigensystem(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(7);
    SymmetricMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) h.set(i, j, rng.gaussian());
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetric_eigensystem(h));
    }
}
BENCHMARK(BM_SymmetricEigensystem)->Arg(16)->Arg(64)->Arg(256);

static void BM_SampleToeplitz(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_toeplitz(d, rng));
    }
}
BENCHMARK(BM_SampleToeplitz)->Arg(16)->Arg(64)->Arg(256);

static void BM_RefinedBound(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 0.001;
        benchmark::DoNotOptimize(refined_bound(10, 20, 1.0, 0.5, t));
    }
}
BENCHMARK(BM_RefinedBound);

static void BM_ClopperPearson(benchmark::State& state) {
    long k = 0;
    for (auto _ : state) {
        k = (k + 37) % 10001;
        benchmark::DoNotOptimize(clopper_pearson(k, 10000, 0.99));
    }
}
BENCHMARK(BM_ClopperPearson);

static void BM_EstimateTail(benchmark::State& state) {
    const auto spec = EnsembleSpec::iid(5, 5, SubGaussianModel::standard_gaussian());
    const std::vector<double> grid{0.0, 2.0, 4.0, 6.0, 8.0};
    HarnessOptions options;
    options.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_tail(spec, grid, 2000, 13, 0.99, options));
    }
}
BENCHMARK(BM_EstimateTail)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
