#include <benchmark/benchmark.h>

#include <vector>

#include "fracwave/analysis.hpp"
#include "fracwave/multiplier.hpp"
#include "fracwave/propagator.hpp"
#include "fracwave/quadrature_solver.hpp"
#include "fracwave/spectral_solver.hpp"

using namespace fracwave;

namespace {

SpectralState make_state(const SpatialGrid& grid, const FractionalOrder& order) {
  InitialData data{DataComponent::gaussian(0.1), DataComponent::zero()};
  return sample_initial(data, grid, order);
}

void BM_DispersionSymbol(benchmark::State& state) {
  const FractionalOrder order(1.5);
  double xi = 0.0;
  for (auto _ : state) {
    xi += 1e-3;
    benchmark::DoNotOptimize(dispersion_symbol(order, xi));
  }
}
BENCHMARK(BM_DispersionSymbol);

void BM_Evolve(benchmark::State& state) {
  const SpatialGrid grid(200.0, static_cast<std::size_t>(state.range(0)));
  const FractionalOrder order(2.5);
  const SpectralState s0 = make_state(grid, order);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(evolve(s0, t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evolve)->RangeMultiplier(4)->Range(1024, 16384)->Complexity();

void BM_SolveOnGrid(benchmark::State& state) {
  const SpatialGrid grid(200.0, 16384);
  const FractionalOrder order(1.5);
  InitialData data{DataComponent::gaussian(0.1), DataComponent::zero()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_at_times(data, grid, order, {5.0}));
  }
}
BENCHMARK(BM_SolveOnGrid);

void BM_SolveAtPoints(benchmark::State& state) {
  const SpatialGrid grid(200.0, 16384);
  const FractionalOrder order(1.5);
  InitialData data{DataComponent::gaussian(0.1), DataComponent::zero()};
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -15.0 + 30.0 * i / xs.size();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_at_points(data, grid, order, {5.0}, xs));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveAtPoints)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_QuadraturePoint(benchmark::State& state) {
  const FractionalOrder order(1.5);
  QuadratureSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_point(order, 0.1, 5.0, 10.0, spec));
  }
}
BENCHMARK(BM_QuadraturePoint);

void BM_SobolevNorm(benchmark::State& state) {
  const SpatialGrid grid(200.0, 16384);
  const FractionalOrder order(2.0);
  const SpectralState s0 = make_state(grid, order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sobolev_norm(s0, -0.6));
  }
}
BENCHMARK(BM_SobolevNorm);

void BM_DecayProbe(benchmark::State& state) {
  const SpatialGrid grid(200.0, 16384);
  const FractionalOrder order(2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        decay_probe_gaussian(order, 0.05, 0.0, 5.0, WindowSpec{}, grid));
  }
}
BENCHMARK(BM_DecayProbe);

}  // namespace

BENCHMARK_MAIN();
