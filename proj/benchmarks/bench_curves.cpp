#include "capillary/curves.hpp"
#include "capillary/forces.hpp"
#include "capillary/regions.hpp"

#include <benchmark/benchmark.h>

using namespace capillary;

static void BM_AttractingCurve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(attracting_curve(0.5, n).points.data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AttractingCurve)->Range(16, 4096);

static void BM_RepellingCurve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(repelling_curve(0.7, n).points.data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RepellingCurve)->Range(16, 4096);

static void BM_ArclengthToVertical(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(attracting_curve_arclength(0.5).points.data());
}
BENCHMARK(BM_ArclengthToVertical);

static void BM_SolvePlates(benchmark::State& state) {
    PlateConfig cfg{0.3, 0.6};
    cfg.separation = plate_separation(FamilyParameter::attracting(0.9), cfg).separation;
    for (auto _ : state) benchmark::DoNotOptimize(solve_plates(cfg, Regime::Attracting).family.u0);
}
BENCHMARK(BM_SolvePlates);

static void BM_LimitSweep(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_sweep({0.2, 0.1, 0.05, 0.025}, CriticalAnchor{}, Window{}).entries.data());
    }
}
BENCHMARK(BM_LimitSweep)->Unit(benchmark::kMillisecond);
