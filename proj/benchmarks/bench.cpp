#include <benchmark/benchmark.h>

#include "secantry/dejonq.hpp"
#include "secantry/limit_series.hpp"
#include "secantry/oracle.hpp"
#include "secantry/secant.hpp"

namespace {

using namespace secantry;

void BM_Classify(benchmark::State& state) {
    const SecantProblem P(SeriesParams(12, 5, 15), 4, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(P));
    }
}
BENCHMARK(BM_Classify);

void BM_SweepSmall(benchmark::State& state) {
    const SweepBounds bounds{12, 5, 15, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(bounds));
    }
}
BENCHMARK(BM_SweepSmall);

void BM_SweepAcceptanceBounds(benchmark::State& state) {
    // The domain the acceptance suite classifies, without the d <= 2g-2+r cut.
    const SweepBounds bounds{20, 8, 46, 12};
    for (auto _ : state) {
        long long conflicts = 0;
        for (const auto& [P, v] : sweep(bounds)) {
            conflicts += v.tag == VerdictTag::Conflict;
        }
        benchmark::DoNotOptimize(conflicts);
    }
}
BENCHMARK(BM_SweepAcceptanceBounds)->Unit(benchmark::kMillisecond);

void BM_RefinedPairs(benchmark::State& state) {
    const NodalSplit split(4, 4, 3, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_refined_pairs(split));
    }
}
BENCHMARK(BM_RefinedPairs);

void BM_AdmissibleDistributions(benchmark::State& state) {
    const SecantProblem P(SeriesParams(12, 5, 15), 4, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(admissible_distributions(P));
    }
}
BENCHMARK(BM_AdmissibleDistributions);

void BM_DjEfExpected(benchmark::State& state) {
    const SecantProblem P(SeriesParams(12, 5, 15), 4, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dj_ef_expected(P));
    }
}
BENCHMARK(BM_DjEfExpected);

}  // namespace

BENCHMARK_MAIN();
