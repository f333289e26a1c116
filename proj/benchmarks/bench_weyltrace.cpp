/*
 * bench_weyltrace.cpp
 * -------------------
 * Microbenchmarks for the hot paths: the star product, the Hochschild
 * boundary, the free expectation, and a mid-size wheel coefficient.
 * Inputs are sampled once with a fixed seed so runs are comparable.
 */
#include <benchmark/benchmark.h>

#include "weyltrace/configspace.hpp"
#include "weyltrace/expectation.hpp"
#include "weyltrace/sampler.hpp"

using namespace weyltrace;

static void BM_MoyalProduct(benchmark::State& state) {
    Sampler s(17, 4, 1);
    const Form a = s.weyl_element(6);
    const Form b = s.weyl_element(6);
    for (auto _ : state) benchmark::DoNotOptimize(moyal_mul(a, b));
}
BENCHMARK(BM_MoyalProduct);

static void BM_HochschildBoundary(benchmark::State& state) {
    Sampler s(19, 2, 2);
    const Chain c = s.chain(4, 3);
    for (auto _ : state) benchmark::DoNotOptimize(hochschild_b(c));
}
BENCHMARK(BM_HochschildBoundary);

static void BM_FreeExpectation(benchmark::State& state) {
    Sampler s(23, 2, 2);
    std::vector<Matrix> ms;
    for (int i = 0; i < 3; ++i) ms.push_back(s.weyl_matrix(3));
    const Chain c = bar_normalize(Chain::from_matrices(ms));
    for (auto _ : state) benchmark::DoNotOptimize(free_expectation(c));
}
BENCHMARK(BM_FreeExpectation);

static void BM_WheelCoefficient(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wheel_coefficient(k));
}
BENCHMARK(BM_WheelCoefficient)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
