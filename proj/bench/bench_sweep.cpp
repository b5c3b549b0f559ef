// Serial reference pipeline vs. the OpenMP extreme-coefficient kernel.

#include <benchmark/benchmark.h>

#include "platkit/sweep.hpp"

namespace {

void BM_SweepReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(platkit::sweep_monic_reference(state.range(0)));
}
BENCHMARK(BM_SweepReference)->Arg(101)->Arg(301)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(platkit::sweep_monic_parallel(state.range(0), jobs));
}
BENCHMARK(BM_SweepParallel)
    ->Args({101, 1})
    ->Args({301, 1})
    ->Args({301, 4})
    ->Args({2001, 1})
    ->Args({2001, 8})
    ->Unit(benchmark::kMillisecond);

void BM_ExtremeCoefficients(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(platkit::extreme_coefficients(p, 2));
}
BENCHMARK(BM_ExtremeCoefficients)->Arg(199)->Arg(1999);

}  // namespace

BENCHMARK_MAIN();
