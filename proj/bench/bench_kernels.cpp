#include <benchmark/benchmark.h>

#include "isomin/gallery.hpp"
#include "isomin/reconstruct.hpp"
#include "isomin/sweep.hpp"

using namespace isomin;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_ResidualSweep(benchmark::State& state) {
  const auto g = gallery::fixture("saearp");
  const AngleField f = g.angle_field("nu");
  const int n = static_cast<int>(state.range(0));
  const SampleGrid grid{g.chart.domain(), n, n};
  for (auto _ : state) benchmark::DoNotOptimize(residual_sweep(f, grid, exec_of(state)).m1.max_abs);
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_CompatSweep(benchmark::State& state) {
  const auto g = gallery::fixture("parabolic-catenoid");
  const AngleField f = g.angle_field("mu");
  const int n = static_cast<int>(state.range(0));
  const GaussCodazziData d = build_data(f, solve_theta(f, GridSpec::over(g.chart.domain(), n, n)));
  const SampleGrid grid{g.chart.domain(), n, n};
  for (auto _ : state) benchmark::DoNotOptimize(compat_sweep(d, grid, exec_of(state)).c1.max_abs);
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Integrate(benchmark::State& state) {
  const auto g = gallery::fixture("parabolic-catenoid");
  const AngleField f = g.angle_field("mu");
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid = GridSpec::over(g.chart.domain(), n, n);
  const GaussCodazziData d = build_data(f, solve_theta(f, grid));
  const AmbientModel m = AmbientModel::for_curvature(g.c);
  IntegrationOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_immersion(d, m, grid, opt).states.size());
  state.SetItemsProcessed(state.iterations() * n * n);
}

}  // namespace

BENCHMARK(BM_ResidualSweep)->ArgsProduct({{51, 101}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompatSweep)->ArgsProduct({{51, 101}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Integrate)->ArgsProduct({{51, 101}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
