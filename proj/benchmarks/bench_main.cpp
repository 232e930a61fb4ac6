#include <benchmark/benchmark.h>

#include <cmath>

#include "besselvisco/besselvisco.hpp"

namespace {

using namespace bvisco;

void BM_BesselJ(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(2.7, x));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(20)->Arg(200);

void BM_Zeros(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_zeros(0.5, count));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Zeros)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CreepComplianceSeries(benchmark::State& state) {
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  const Model model(Order(1.0), {}, t);
  for (auto _ : state) benchmark::DoNotOptimize(model.creep_compliance(t));
}
BENCHMARK(BM_CreepComplianceSeries)->DenseRange(0, 5);

void BM_Talbot(benchmark::State& state) {
  const Order order(1.0);
  TalbotConfig cfg;
  cfg.node_count = static_cast<int>(state.range(0));
  const LaplaceFunction f = [&](Complex s) { return psi_tilde(order, s); };
  for (auto _ : state) benchmark::DoNotOptimize(invert_numeric(f, 0.1, cfg));
}
BENCHMARK(BM_Talbot)->Arg(24)->Arg(48);

void BM_StressResponse(benchmark::State& state) {
  const auto points = static_cast<std::size_t>(state.range(0));
  const auto grid = linear_grid(0.0, 1.0, points);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = std::sin(6.283185307179586 * grid[i]);
  const LoadHistory strain(grid, values);
  for (auto _ : state) benchmark::DoNotOptimize(stress_response(Order(0.5), strain, grid));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StressResponse)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
