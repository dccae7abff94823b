#include <random>

#include "benchmark/benchmark.h"
#include "sbpsat/model.hpp"
#include "sbpsat/sat_scheme.hpp"
#include "sbpsat/tensor_ops.hpp"
#include "sbpsat/time_integration.hpp"

using namespace sbpsat;

namespace {

VectorField random_state(const GridSpec& grid, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  VectorField v(grid);
  for (int c = 0; c < v.dim(); ++c)
    for (double& x : v[c].values) x = dist(gen);
  return v;
}

void BM_ApplyDAxis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const GridSpec grid = GridSpec::square(n, -1.0, 1.0);
  const OperatorSet ops = make_operators(grid, order);
  const ScalarField w = random_state(grid, 1)[0];
  const int axis = static_cast<int>(state.range(2));
  for (auto _ : state) {
    ScalarField d = apply_d_axis(ops, axis, w);
    benchmark::DoNotOptimize(d.values.data());
  }
  state.SetItemsProcessed(state.iterations() * grid.num_nodes());
}

void BM_CurlCurl2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid = GridSpec::square(n, -1.0, 1.0);
  const OperatorSet ops = make_operators(grid, static_cast<int>(state.range(1)));
  const VectorField v = random_state(grid, 2);
  for (auto _ : state) {
    VectorField cc = curlcurl_2d(ops, v);
    benchmark::DoNotOptimize(cc[0].values.data());
  }
  state.SetItemsProcessed(state.iterations() * grid.num_nodes());
}

void BM_SemidiscreteRhs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const GridSpec grid = GridSpec::square(n, -1.0, 1.0);
  const OperatorSet ops = make_operators(grid, order);
  ModelConfig model;
  model.velocity = rotation_velocity();
  model.epsilon = 0.01;
  model.bc_kind = BcKind::Mixed;
  model.exact = rotating_hump_solution();
  const SemidiscreteRhs rhs(model, grid, ops, SchemeKind::MixedResistive,
                            ForcingSource::ResidualOracle);
  const VectorField v = initial_hump(grid);
  for (auto _ : state) {
    VectorField r = rhs(v, 0.3);
    benchmark::DoNotOptimize(r[0].values.data());
  }
  state.SetItemsProcessed(state.iterations() * grid.num_nodes());
}

void BM_Rk2Step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid = GridSpec::square(n, -1.0, 1.0);
  const OperatorSet ops = make_operators(grid, 4);
  ModelConfig model;
  model.velocity = rotation_velocity();
  model.epsilon = 0.01;
  const SemidiscreteRhs rhs(model, grid, ops, SchemeKind::DirichletResistive,
                            ForcingSource::None);
  const double dt = select_dt(0.5, grid, model.velocity, model.epsilon);
  VectorField v = initial_hump(grid);
  for (auto _ : state) {
    v = rk2_step(v, 0.0, dt, rhs);
    benchmark::DoNotOptimize(v[0].values.data());
  }
  state.SetItemsProcessed(state.iterations() * grid.num_nodes());
}

}  // namespace

BENCHMARK(BM_ApplyDAxis)
    ->Args({100, 2, 0})
    ->Args({100, 2, 1})
    ->Args({100, 4, 0})
    ->Args({100, 4, 1})
    ->Args({320, 4, 0})
    ->Args({320, 4, 1});
BENCHMARK(BM_CurlCurl2D)->Args({100, 2})->Args({100, 4})->Args({320, 4});
BENCHMARK(BM_SemidiscreteRhs)->Args({100, 2})->Args({100, 4})->Args({320, 4});
BENCHMARK(BM_Rk2Step)->Args({100})->Args({320});

BENCHMARK_MAIN();
