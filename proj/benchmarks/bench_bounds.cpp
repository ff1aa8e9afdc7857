#include <benchmark/benchmark.h>

#include "cosetq/bounds.hpp"

using namespace cosetq;

static void BM_lp2(benchmark::State& state) {
    for (auto _ : state) {
        auto r = lp2_optimization(0.3);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_lp2)->Unit(benchmark::kMillisecond);

static void BM_ball_exponent_w3(benchmark::State& state) {
    for (auto _ : state) {
        auto r = ball_exponent_bound(3, 0.2, BallVariant::w3);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ball_exponent_w3)->Unit(benchmark::kMillisecond);

static void BM_ball_exponent_general(benchmark::State& state) {
    for (auto _ : state) {
        auto r = ball_exponent_bound(5, 0.2, BallVariant::general);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ball_exponent_general)->Unit(benchmark::kMillisecond);

static void BM_curve_grid(benchmark::State& state) {
    // every closed-form curve over a 9-point grid; the optimizing curves
    // (lp2, bhl) are benchmarked separately
    BoundCurve c;
    for (auto _ : state) {
        double acc = 0;
        for (const auto& name : bound_catalog()) {
            if (name == "lp2" || name == "bhl") continue;
            c.name = name;
            for (int i = 1; i <= 9; ++i) acc += evaluate_bound(c, 0.05 * i);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_curve_grid);

static void BM_shortening(benchmark::State& state) {
    BoundCurve lp1;
    lp1.name = "lp1";
    for (auto _ : state) {
        auto r = apply_shortening(lp1, 3, 0.3);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_shortening)->Unit(benchmark::kMillisecond);

static void BM_comparison_report(benchmark::State& state) {
    std::vector<double> grid;
    for (int i = 2; i <= 9; ++i) grid.push_back(0.05 * i);
    for (auto _ : state) {
        auto rep = comparison_report(4, grid);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_comparison_report)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
