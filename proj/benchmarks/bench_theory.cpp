#include <benchmark/benchmark.h>

#include "scenval/sampling.hpp"
#include "scenval/theory.hpp"

using namespace scenval;

namespace {

void QQuadrature1D(benchmark::State& state) {
    const Density density = density_for(DensityKind::Cauchy11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(theory::q_quadrature(0, 0.5, 1, density));
    }
}
BENCHMARK(QQuadrature1D);

void QQuadrature2D(benchmark::State& state) {
    const Density density = density_for(DensityKind::Cauchy11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(theory::q_quadrature(0, 0.5, 2, density));
    }
}
BENCHMARK(QQuadrature2D);

void SampleNormal2D(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const Density density = density_for(DensityKind::StandardNormal);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sample(density, 2, m, SeedPath{2, "bench", rep++, SourceLabel::Empirical}));
    }
}
BENCHMARK(SampleNormal2D)->Arg(500)->Arg(5000);

void SamplePareto1D(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const Density density = density_for(DensityKind::Pareto11);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sample(density, 1, m, SeedPath{3, "bench", rep++, SourceLabel::Empirical}));
    }
}
BENCHMARK(SamplePareto1D)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
