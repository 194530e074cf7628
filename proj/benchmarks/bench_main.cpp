#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "fattail/chaos.hpp"
#include "fattail/diff.hpp"
#include "fattail/distributions.hpp"
#include "fattail/fit.hpp"
#include "fattail/stats.hpp"

namespace {

using namespace fattail;

std::vector<double> heavy_tailed(std::size_t n) {
  std::mt19937_64 rng(42);
  std::student_t_distribution<double> dist(2.5);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

void BM_Simulate(benchmark::State& state, ChaosSystem system) {
  ChaosSpec spec = default_spec(system);
  spec.steps = state.range(0);
  spec.discard = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Simulate, lorenz, ChaosSystem::lorenz)->Arg(100'000);
BENCHMARK_CAPTURE(BM_Simulate, duffing, ChaosSystem::duffing)->Arg(100'000);
BENCHMARK_CAPTURE(BM_Simulate, chua, ChaosSystem::chua)->Arg(100'000);

void BM_DiffN(benchmark::State& state) {
  const Series s(heavy_tailed(static_cast<std::size_t>(state.range(0))));
  const DiffSpec spec{DiffMethod::plain, 3, 5};
  for (auto _ : state) benchmark::DoNotOptimize(diff_n(s, spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DiffN)->Arg(1 << 16)->Arg(1 << 20);

void BM_DiffRatio(benchmark::State& state) {
  auto v = heavy_tailed(1 << 18);
  for (auto& x : v) x = 100.0 + std::abs(x);
  const Series s(std::move(v));
  for (auto _ : state) benchmark::DoNotOptimize(diff_ratio(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DiffRatio)->Arg(2)->Arg(5)->Arg(50);

void BM_TCdf(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 10.0;
  double x = -8.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_cdf(x, nu));
    x = x > 8.0 ? -8.0 : x + 0.01;
  }
}
BENCHMARK(BM_TCdf)->Arg(10)->Arg(25)->Arg(300);

void BM_Summarize(benchmark::State& state) {
  const Series s(heavy_tailed(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(summarize(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Summarize)->Arg(1 << 16)->Arg(1 << 19);

void BM_FitTMle(benchmark::State& state) {
  const auto v = heavy_tailed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_t_mle(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitTMle)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
