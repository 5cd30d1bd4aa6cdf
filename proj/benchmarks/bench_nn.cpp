#include <benchmark/benchmark.h>

#include "scenval/measures.hpp"
#include "scenval/nn_engine.hpp"
#include "scenval/sampling.hpp"

using namespace scenval;

namespace {

PointSet make_sample(int m, SourceLabel role) {
    return sample(density_for(DensityKind::StandardNormal), 2, m,
                  SeedPath{1, "bench", 0, role});
}

void KnnPooled(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const auto e = make_sample(m, SourceLabel::Empirical);
    const auto g = make_sample(m, SourceLabel::Generated);
    for (auto _ : state) {
        auto table = knn_pooled(e, g, 3, 1);
        benchmark::DoNotOptimize(table);
    }
    state.SetComplexityN(2 * m);
}
BENCHMARK(KnnPooled)->RangeMultiplier(2)->Range(256, 8192)->Complexity();

void WithinSetNn(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const auto e = make_sample(m, SourceLabel::Empirical);
    for (auto _ : state) {
        auto dist = within_set_nn_distance(e, 1);
        benchmark::DoNotOptimize(dist);
    }
    state.SetComplexityN(m);
}
BENCHMARK(WithinSetNn)->RangeMultiplier(2)->Range(256, 8192)->Complexity();

void MrCurveFiveRhos(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const auto e = make_sample(m, SourceLabel::Empirical);
    const auto g = make_sample(m, SourceLabel::Generated);
    const std::vector<double> rhos = {0.1, 0.3, 0.5, 0.7, 0.9};
    for (auto _ : state) {
        auto curve = mr_curve(e, g, rhos, 1);
        benchmark::DoNotOptimize(curve);
    }
    state.SetComplexityN(m);
}
BENCHMARK(MrCurveFiveRhos)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void NncStatistic(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const auto e = make_sample(m, SourceLabel::Empirical);
    const auto g = make_sample(m, SourceLabel::Generated);
    for (auto _ : state) {
        auto result = nnc(e, g, 3, ExpectationMode::Exact, 1);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(NncStatistic)->RangeMultiplier(4)->Range(256, 4096);

}  // namespace

BENCHMARK_MAIN();
