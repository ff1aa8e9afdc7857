#include <benchmark/benchmark.h>

#include <random>

#include "cosetq/cwgf.hpp"
#include "cosetq/f2.hpp"
#include "cosetq/search.hpp"

using namespace cosetq;

namespace {

LinearCode fixed_random_code(int n, int k) {
    std::mt19937_64 rng(42);
    LinearCode code(n);
    while (code.dimension() < k) code.insert_word(rng() & full_mask(n));
    return code;
}

}  // namespace

static void BM_coset_distribution(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LinearCode code = fixed_random_code(n, n / 2);
    for (auto _ : state) {
        auto dist = coset_weight_distribution(code);
        benchmark::DoNotOptimize(dist);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_coset_distribution)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_coset_counts_raw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LinearCode code = fixed_random_code(n, n / 2);
    for (auto _ : state) {
        auto counts = coset_weight_counts(code);
        benchmark::DoNotOptimize(counts);
    }
}
BENCHMARK(BM_coset_counts_raw)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_closed_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto dist = closed_form_all_one(n);
        benchmark::DoNotOptimize(dist);
    }
}
BENCHMARK(BM_closed_form)->Arg(16)->Arg(32)->Arg(64);

static void BM_dual(benchmark::State& state) {
    LinearCode code = fixed_random_code(static_cast<int>(state.range(0)), 10);
    for (auto _ : state) {
        auto d = code.dual();
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_dual)->Arg(20)->Arg(40)->Arg(64);

static void BM_evaluate_q_exact(benchmark::State& state) {
    auto dist = coset_weight_distribution(fixed_random_code(16, 8));
    auto grid = default_lambda_grid();
    for (auto _ : state) {
        Rational acc(0);
        for (const auto& lam : grid) acc += evaluate_q(dist, lam);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_evaluate_q_exact);

static void BM_span_enumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t seen =
            for_each_span(n, 3, /*covered_only=*/true, 50'000'000, [](const LinearCode&) {});
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(BM_span_enumeration)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
