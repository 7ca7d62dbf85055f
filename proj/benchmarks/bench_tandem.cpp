#include <benchmark/benchmark.h>

#include "tandem/tandem.hpp"

using namespace tandem;

namespace {

SystemSpec exp_system(std::size_t service, Discipline d = Discipline::kInfinite) {
  SystemSpec s;
  s.stations.assign(service + 1, DistributionSpec::exponential(1.0));
  s.discipline = d;
  return s;
}

void BM_Sample(benchmark::State& state) {
  const auto s = exp_system(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = 10'000;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_realization(s, n, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Sample)->Arg(1)->Arg(3)->Arg(8);

void BM_Recursion(benchmark::State& state) {
  const auto s = exp_system(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = 10'000;
  const Realization r = sample_realization(s, n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_recursion(r));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Recursion)->Arg(1)->Arg(3)->Arg(8);

void BM_Trajectory(benchmark::State& state) {
  const auto s = exp_system(3);
  const std::size_t n = 10'000;
  for (auto _ : state) {
    Trajectory t(s, 7);
    for (std::size_t i = 0; i < n; ++i) t.step();
    benchmark::DoNotOptimize(t.last_departure());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Trajectory);

void BM_ExplicitSolution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Realization r = sample_realization(exp_system(3), n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(explicit_solution(r, 3, n));
  }
  state.counters["tuples"] = static_cast<double>(tuple_count(3, n));
}
BENCHMARK(BM_ExplicitSolution)->Arg(8)->Arg(16)->Arg(32);

void BM_Blocking(benchmark::State& state) {
  const auto rule = static_cast<BlockingRule>(state.range(0));
  const std::size_t n = 10'000;
  const Realization r = sample_realization(exp_system(2), n, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_blocking_recursion(r, rule));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Blocking)
    ->Arg(static_cast<int>(BlockingRule::kManufacturing))
    ->Arg(static_cast<int>(BlockingRule::kCommunication));

void BM_EstimateGamma(benchmark::State& state) {
  const auto s = exp_system(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_gamma(s, 20'000, 4, 11));
  }
}
BENCHMARK(BM_EstimateGamma)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
