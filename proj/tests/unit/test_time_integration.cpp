#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sbpsat/time_integration.hpp"
#include "support/test_utils.hpp"

using namespace sbpsat;
namespace tt = sbpsat::testing;

TEST_CASE("select_dt advective branch") {
  const GridSpec grid = GridSpec::square(100, -1.0, 1.0);
  const double dt = select_dt(0.5, grid, rotation_velocity(), 0.0);
  // h = 2/99 and max |u| = sqrt(2) at the corners.
  CHECK(dt == doctest::Approx(0.5 * (2.0 / 99.0) / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("select_dt parabolic branch scales with h^2") {
  const double eps = 10.0;
  const GridSpec coarse = GridSpec::square(51, 0.0, 1.0);
  const GridSpec fine = GridSpec::square(101, 0.0, 1.0);
  const double dtc = select_dt(0.5, coarse, rotation_velocity(), eps);
  const double dtf = select_dt(0.5, fine, rotation_velocity(), eps);
  CHECK(dtc == doctest::Approx(0.5 * 0.9 * coarse.min_spacing() * coarse.min_spacing() /
                               (4.0 * eps)).epsilon(1e-13));
  CHECK(dtc / dtf == doctest::Approx(4.0).epsilon(1e-2));
}

TEST_CASE("select_dt validates the cfl number") {
  const GridSpec grid = GridSpec::square(10, 0.0, 1.0);
  CHECK_THROWS_AS(select_dt(0.0, grid, rotation_velocity(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(select_dt(1.5, grid, rotation_velocity(), 0.0), std::invalid_argument);
}

TEST_CASE("rk2_step leaves the state alone for a zero rhs") {
  const GridSpec grid = GridSpec::square(6, 0.0, 1.0);
  std::mt19937 gen(3);
  const VectorField v = tt::random_vector_field(grid, gen);
  const VectorField next =
      rk2_step(v, 0.0, 0.1, [&](const VectorField& w, double) { return VectorField(w.grid()); });
  for (int c = 0; c < 2; ++c)
    CHECK(tt::max_abs_diff(v[c].values, next[c].values) == 0.0);
}

TEST_CASE("rk2_step reproduces the heun amplification factor") {
  const GridSpec grid = GridSpec::square(4, 0.0, 1.0);
  const double lambda = -1.7, dt = 0.05, y0 = 0.83;
  const VectorField v(grid, y0);
  const VectorField next = rk2_step(v, 0.0, dt, [&](const VectorField& w, double) {
    VectorField out = w;
    for (int c = 0; c < 2; ++c)
      for (double& x : out[c].values) x *= lambda;
    return out;
  });
  const double factor = 1.0 + lambda * dt + 0.5 * lambda * dt * lambda * dt;
  for (int c = 0; c < 2; ++c)
    for (double x : next[c].values) CHECK(x == doctest::Approx(y0 * factor).epsilon(1e-14));
}

TEST_CASE("rk2_step converges at second order in dt") {
  // Fixed fine grid, spatially exact forcing; halving dt quarters the error.
  const GridSpec grid = GridSpec::square(9, 0.0, 1.0);
  std::mt19937 gen(5);
  const VectorField v0 = tt::random_vector_field(grid, gen);
  const double lambda = -0.9, t_end = 1.0;
  auto rhs = [&](const VectorField& w, double) {
    VectorField out = w;
    for (int c = 0; c < 2; ++c)
      for (double& x : out[c].values) x *= lambda;
    return out;
  };
  auto run = [&](int steps) {
    VectorField v = v0;
    const double dt = t_end / steps;
    for (int s = 0; s < steps; ++s) v = rk2_step(v, s * dt, dt, rhs);
    double err = 0.0;
    const double exact = std::exp(lambda * t_end);
    for (int c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < v[c].size(); ++i)
        err = std::max(err, std::abs(v[c][i] - v0[c][i] * exact));
    return err;
  };
  const double e1 = run(32), e2 = run(64);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("integrate returns the initial state for t_final = 0") {
  const GridSpec grid = GridSpec::square(12, -1.0, 1.0);
  const OperatorSet ops = make_operators(grid, 2);
  ModelConfig model;
  model.velocity = rotation_velocity();
  model.epsilon = 0.01;
  const VectorField v0 = initial_hump(grid);
  StepControl control;
  control.t_final = 0.0;
  const IntegrateResult res = integrate(v0, model, grid, ops,
                                        SchemeKind::DirichletResistive,
                                        ForcingSource::None, control);
  CHECK(res.steps == 0);
  for (int c = 0; c < 2; ++c)
    CHECK(tt::max_abs_diff(res.state[c].values, v0[c].values) == 0.0);
  CHECK(res.monitors.samples.size() == 1);
}

TEST_CASE("integrate dissipates energy for homogeneous still flow") {
  const GridSpec grid = GridSpec::square(20, 0.0, 1.0);
  const OperatorSet ops = make_operators(grid, 2);
  ModelConfig model;
  model.velocity = zero_velocity(2);
  model.epsilon = 0.05;
  const VectorField v0 = initial_hump(grid);
  StepControl control;
  control.t_final = 0.5;
  control.monitor_every = 5;
  const IntegrateResult res = integrate(v0, model, grid, ops,
                                        SchemeKind::DirichletResistive,
                                        ForcingSource::None, control);
  REQUIRE(res.monitors.samples.size() > 3);
  for (std::size_t i = 1; i < res.monitors.samples.size(); ++i) {
    CHECK(res.monitors.samples[i].t > res.monitors.samples[i - 1].t);
    CHECK(res.monitors.samples[i].energy <=
          res.monitors.samples[i - 1].energy * (1.0 + 1e-12));
  }
  // The truncated last step lands exactly on t_final.
  CHECK(res.monitors.samples.back().t == 0.5);
}

TEST_CASE("homogeneous rotation flow obeys the exponential energy bound") {
  ModelConfig model;
  model.velocity = rotation_velocity();
  model.epsilon = 0.01;
  StepControl control;
  control.t_final = 1.0;
  control.monitor_every = 5;
  for (int n : {20, 40, 80}) {
    const GridSpec grid = GridSpec::square(n, -1.0, 1.0);
    const OperatorSet ops = make_operators(grid, 2);
    const IntegrateResult res = integrate(initial_hump(grid), model, grid, ops,
                                          SchemeKind::DirichletResistive,
                                          ForcingSource::None, control);
    const double e0 = res.monitors.samples.front().energy;
    for (const MonitorSample& s : res.monitors.samples)
      CHECK(s.energy <= e0 * std::exp(1.0 * s.t) * (1.0 + 1e-12));
  }
}

TEST_CASE("integrate is deterministic") {
  const GridSpec grid = GridSpec::square(16, -1.0, 1.0);
  const OperatorSet ops = make_operators(grid, 2);
  ModelConfig model;
  model.velocity = rotation_velocity();
  model.epsilon = 0.01;
  model.bc_kind = BcKind::Mixed;
  model.exact = rotating_hump_solution();
  StepControl control;
  control.t_final = 0.1;
  const VectorField v0 = initial_hump(grid);
  const IntegrateResult a = integrate(v0, model, grid, ops, SchemeKind::MixedResistive,
                                      ForcingSource::ResidualOracle, control);
  const IntegrateResult b = integrate(v0, model, grid, ops, SchemeKind::MixedResistive,
                                      ForcingSource::ResidualOracle, control);
  CHECK(a.steps == b.steps);
  CHECK(a.dt == b.dt);
  for (int c = 0; c < 2; ++c)
    CHECK(tt::max_abs_diff(a.state[c].values, b.state[c].values) == 0.0);
  REQUIRE(a.monitors.samples.size() == b.monitors.samples.size());
  for (std::size_t i = 0; i < a.monitors.samples.size(); ++i) {
    CHECK(a.monitors.samples[i].energy == b.monitors.samples[i].energy);
    CHECK(a.monitors.samples[i].divergence_norm == b.monitors.samples[i].divergence_norm);
  }
}

TEST_CASE("integrate reports instability with a located diagnostic") {
  const GridSpec grid = GridSpec::square(12, 0.0, 1.0);
  const OperatorSet ops = make_operators(grid, 2);
  ModelConfig model;
  model.velocity = zero_velocity(2);
  model.epsilon = 1.0;
  StepControl control;
  control.t_final = 200.0;
  control.dt = 1.0;  // far beyond the parabolic limit; grows until overflow
  control.monitor_every = 1;
  const VectorField v0 = initial_hump(grid);
  CHECK_THROWS_AS(integrate(v0, model, grid, ops, SchemeKind::DirichletResistive,
                            ForcingSource::None, control),
                  InstabilityError);
}
