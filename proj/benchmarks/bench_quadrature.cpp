#include "capillary/quadrature.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

using namespace capillary;

static void BM_DeltaXiRegular(benchmark::State& state) {
    QuadratureSettings q;
    q.abs_tol = q.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(delta_xi(1.5, 0.0, std::numbers::pi / 2.0, q));
}
BENCHMARK(BM_DeltaXiRegular)->Arg(6)->Arg(10)->Arg(13);

static void BM_HalfExtent(benchmark::State& state) {
    QuadratureSettings q;
    q.singular_endpoint_strategy =
        state.range(0) == 0 ? SingularEndpointStrategy::Regularized : SingularEndpointStrategy::SubstitutionSqrt;
    for (auto _ : state) benchmark::DoNotOptimize(xi0(std::numbers::pi / 3.0, q).xi0);
    state.SetLabel(state.range(0) == 0 ? "regularized" : "substitution");
}
BENCHMARK(BM_HalfExtent)->Arg(0)->Arg(1);

static void BM_HalfExtentDerivative(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dxi0_dU0(std::numbers::pi / 4.0));
}
BENCHMARK(BM_HalfExtentDerivative);
