// Serial reference kernels against their OpenMP counterparts.
#include "modrat/classification.hpp"
#include "modrat/conditions.hpp"

#include <benchmark/benchmark.h>

using namespace modrat;

namespace {

void BM_Enumerate(benchmark::State& state) {
    const Genus g(6);
    const Integer n_max(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(g, n_max));
}

void BM_EnumerateParallel(benchmark::State& state) {
    const Genus g(6);
    const Integer n_max(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_parallel(g, n_max));
}

// Rows (1, x, x^2, ...) on distinct nodes, so no subset is dependent and
// every subset is examined.
RationalMatrix vandermonde(std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Rational x = static_cast<long>(r) + 1, power = 1;
        for (std::size_t c = 0; c < cols; ++c, power *= x) m(r, c) = power;
    }
    return m;
}

void BM_ConditionB(benchmark::State& state) {
    const auto phi = vandermonde(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(condition_b(phi));
}

void BM_ConditionBParallel(benchmark::State& state) {
    const auto phi = vandermonde(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(condition_b_parallel(phi));
}

OmegaMatrix sampling_omega() {
    RationalMatrix m(2, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        m(0, j) = 1;
        m(1, j) = static_cast<long>(j) + 1;
    }
    return OmegaMatrix(m);
}

void BM_Sampling(benchmark::State& state) {
    const auto omega = sampling_omega();
    const auto trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_generic_transformation(omega, 1, trials));
}

void BM_SamplingParallel(benchmark::State& state) {
    const auto omega = sampling_omega();
    const auto trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_generic_transformation_parallel(omega, 1, trials));
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConditionB)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConditionBParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sampling)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SamplingParallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
