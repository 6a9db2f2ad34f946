#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include <fracwave/fd_solve.hpp>
#include <fracwave/fracops.hpp>
#include <fracwave/green.hpp>
#include <fracwave/solver.hpp>
#include <fracwave/specfun.hpp>

using namespace fracwave;

namespace {

// M_nu(z) inside the series envelope
void BM_MWrightSeries(benchmark::State& state) {
  const MWrightOrder order(0.75);
  double z = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m_wright_series(order, z));
    z = z == 1.0 ? 1.1 : 1.0;
  }
}
BENCHMARK(BM_MWrightSeries);

// M_nu(z) past the envelope, through the integral route
void BM_MWrightIntegral(benchmark::State& state) {
  const MWrightOrder order(0.85);
  for (auto _ : state) benchmark::DoNotOptimize(m_wright(order, 3.0));
}
BENCHMARK(BM_MWrightIntegral);

void BM_GreenSecond(benchmark::State& state) {
  const auto order = FracOrder::from_nu(0.75);
  for (auto _ : state) benchmark::DoNotOptimize(green_cauchy_second(order, 1.3, 1.0));
}
BENCHMARK(BM_GreenSecond);

void BM_ConvolveBox(benchmark::State& state) {
  const auto order = FracOrder::from_nu(state.range(0) / 100.0);
  const Signal box = Signal::box();
  for (auto _ : state) benchmark::DoNotOptimize(convolve_green(order, GreenKernel::First, box, 0.7, 1.0));
}
BENCHMARK(BM_ConvolveBox)->Arg(50)->Arg(75)->Arg(85);

// 351 x 2 output points, as in the nu = 1/2 box scenario
void BM_SolveCauchyBox(benchmark::State& state) {
  const auto xs = uniform_grid(0.0, 3.5, 0.01);
  const std::vector<double> ts{0.5, 1.0};
  const auto order = FracOrder::from_nu(0.75);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cauchy(order, Signal::box(), Signal::zero(), xs, ts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size() * ts.size()));
}
BENCHMARK(BM_SolveCauchyBox)->Unit(benchmark::kMillisecond);

void BM_FdSolve(benchmark::State& state) {
  const auto grid = FDGrid::covering(FracOrder::from_nu(0.75), 3.0, 1.0, 0.02, 1.0 / state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fd_solve(grid, Signal::delta(), Signal::zero()));
}
BENCHMARK(BM_FdSolve)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FractionalIntegral(benchmark::State& state) {
  const auto f = SampledFunction::sample([](double t) { return std::sin(t); }, 0.0, 1e-3,
                                         static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fractional_integral(f, 0.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FractionalIntegral)->RangeMultiplier(2)->Range(256, 2048)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
