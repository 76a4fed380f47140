#include <benchmark/benchmark.h>

#include "korder/boundary_geometry.hpp"
#include "korder/extremal_family.hpp"
#include "korder/extremal_solver.hpp"
#include "korder/herglotz_sampler.hpp"
#include "korder/property_sweeps.hpp"

using korder::Complex;
using korder::Order;

static void BM_HAlpha(benchmark::State& state) {
    const Order o(0.6);
    Complex z(0.3, 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(korder::h_alpha(o, z));
    }
}
BENCHMARK(BM_HAlpha);

static void BM_ConvexityTransform(benchmark::State& state) {
    const Order o(0.3);
    Complex z(-0.9, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(korder::convexity_transform(o, z));
    }
}
BENCHMARK(BM_ConvexityTransform);

static void BM_CriticalTheta(benchmark::State& state) {
    const Order o(0.6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(korder::critical_theta(o));
    }
}
BENCHMARK(BM_CriticalTheta);

static void BM_QInfimum(benchmark::State& state) {
    const Order o(0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(korder::q_infimum(o, 0.4));
    }
}
BENCHMARK(BM_QInfimum);

static void BM_Contains(benchmark::State& state) {
    const Order o(0.6);
    const Complex w(0.2, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(korder::contains(o, w, 1e-9));
    }
}
BENCHMARK(BM_Contains);

static void BM_GeneratedValue(benchmark::State& state) {
    const korder::GeneratedFunction gf(Order(0.4), korder::random_measure(7, static_cast<int>(state.range(0)), false));
    const Complex z(0.5, -0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf.value(z));
    }
}
BENCHMARK(BM_GeneratedValue)->Arg(1)->Arg(4)->Arg(16);

static void BM_SubordinationTrial(benchmark::State& state) {
    const Order o(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(korder::subordination_sweep(o, 0, 1, 100, 1e-6));
    }
}
BENCHMARK(BM_SubordinationTrial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
