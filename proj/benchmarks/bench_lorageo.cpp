#include <benchmark/benchmark.h>

#include "lorageo/lorageo.hpp"

using namespace lorageo;

namespace {
const Scenario& scenario() {
  static const Scenario s = make_scenario(NetworkConfig{});
  return s;
}
}  // namespace

static void BM_Hyp2f1(benchmark::State& state) {
  const double x = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(1.0, -2.0 / 2.7, 1.0 - 2.0 / 2.7, x));
}
BENCHMARK(BM_Hyp2f1)->Arg(1)->Arg(100)->Arg(1000);

static void BM_SirMomentClosedForm(benchmark::State& state) {
  const auto& s = scenario();
  for (auto _ : state) benchmark::DoNotOptimize(sir_moment(s, 6.0, 1.0));
}
BENCHMARK(BM_SirMomentClosedForm);

static void BM_SirMomentQuadrature(benchmark::State& state) {
  const auto& s = scenario();
  for (auto _ : state) benchmark::DoNotOptimize(sir_moment_numeric(s, 6.0, 1.0));
}
BENCHMARK(BM_SirMomentQuadrature);

static void BM_Coverage(benchmark::State& state) {
  const auto& s = scenario();
  for (auto _ : state) benchmark::DoNotOptimize(coverage(s));
}
BENCHMARK(BM_Coverage)->Unit(benchmark::kMillisecond);

static void BM_CollisionSim(benchmark::State& state) {
  const auto b = interval_bounds(113.78, 99.0, {SpreadKind::sqrt, 598.0});
  StreamSimOptions opt;
  opt.samples = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_collision_rate(113.78, b, 1, opt).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CollisionSim)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
