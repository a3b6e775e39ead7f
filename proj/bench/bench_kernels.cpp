// Serial reference kernels against the Gray-code OpenMP kernels.
// Arg 0 is the side length n of an n x n coefficient matrix (2n sign bits);
// the parallel variants take the thread count as Arg 1.

#include <benchmark/benchmark.h>

#include <random>

#include "khinlab/forms.hpp"
#include "khinlab/moments.hpp"
#include "khinlab/reference.hpp"

namespace {

using namespace khinlab;

CoefficientTensor random_matrix(std::size_t n, std::size_t cols)
{
    std::mt19937_64 rng(n * 1000 + cols);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto t = CoefficientTensor::zeros({n, cols});
    for (double& e : t.mutable_entries()) {
        e = dist(rng);
    }
    return t;
}

void BM_MomentReference(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto y = random_matrix(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::exact_moment(y, 1.5).value);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::uint64_t{1} << (2 * n)));
}

void BM_MomentParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto y = random_matrix(n, n);
    EnumerationOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_moment(y, 1.5, opts).value);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::uint64_t{1} << (2 * n)));
}

void BM_FormNormReference(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const MultilinearForm form(random_matrix(n, 2 * n), 2.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::form_norm(form));
    }
}

void BM_FormNormParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const MultilinearForm form(random_matrix(n, 2 * n), 2.5);
    EnumerationOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(form_norm(form, opts));
    }
}

} // namespace

BENCHMARK(BM_MomentReference)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MomentParallel)->ArgsProduct({{6, 7, 8, 9}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FormNormReference)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FormNormParallel)->ArgsProduct({{6, 8, 10}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
