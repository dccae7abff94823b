#include "sbpsat/time_integration.hpp"

#include <cmath>

#include "sbpsat/metrics.hpp"

namespace sbpsat {

double select_dt(double cfl, const GridSpec& grid, const VelocityField& velocity,
                 double epsilon, double diffusion_safety) {
  if (cfl <= 0.0 || cfl > 1.0) throw std::invalid_argument("select_dt: cfl must be in (0, 1]");
  if (grid.num_nodes() == 0 || grid.min_spacing() <= 0.0)
    throw std::invalid_argument("select_dt: degenerate grid");

  double umax = 0.0;
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
  const int kk = grid.dim() == 3 ? grid.axis(2).nodes : 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < kk; ++k) {
        std::array<double, 3> x{grid.axis(0).coord(i), grid.axis(1).coord(j), 0.0};
        if (grid.dim() == 3) x[2] = grid.axis(2).coord(k);
        double mag2 = 0.0;
        for (int c = 0; c < grid.dim(); ++c) {
          const double uc = velocity.component(c, x, 0.0);
          mag2 += uc * uc;
        }
        umax = std::max(umax, std::sqrt(mag2));
      }
    }
  }
  umax = std::max(umax, 1e-12);

  const double h = grid.min_spacing();
  double dt = h / umax;
  if (epsilon > 0.0) dt = std::min(dt, diffusion_safety * h * h / (4.0 * epsilon));
  return cfl * dt;
}

namespace {

MonitorSample sample_monitors(const OperatorSet& ops, const VectorField& v, double t,
                              bool record_curl) {
  MonitorSample s;
  s.t = t;
  s.energy = inner_product_P(ops, v, v);
  s.divergence_norm = divergence_error(ops, v);
  if (record_curl && v.dim() == 2) s.curl_norm = norm_P(ops, curl_2d(ops, v));
  return s;
}

void check_finite(const VectorField& v, double t) {
  const GridSpec& grid = v.grid();
  for (int c = 0; c < v.dim(); ++c) {
    const std::size_t nn = v[c].size();
    for (std::size_t q = 0; q < nn; ++q) {
      if (!std::isfinite(v[c][q])) {
        // Recover the node coordinates of the first offender.
        std::array<double, 3> loc{0.0, 0.0, 0.0};
        std::size_t rem = q;
        for (int a = grid.dim() - 1; a >= 0; --a) {
          const int na = grid.axis(a).nodes;
          loc[static_cast<std::size_t>(a)] =
              grid.axis(a).coord(static_cast<int>(rem % static_cast<std::size_t>(na)));
          rem /= static_cast<std::size_t>(na);
        }
        throw InstabilityError(
            t, loc,
            "integrate: non-finite value in component " + std::to_string(c + 1) + " at t=" +
                std::to_string(t) + ", x=(" + std::to_string(loc[0]) + ", " +
                std::to_string(loc[1]) + (grid.dim() == 3 ? ", " + std::to_string(loc[2]) : "") +
                ")");
      }
    }
  }
}

}  // namespace

IntegrateResult integrate(const VectorField& v0, const ModelConfig& model,
                          const GridSpec& grid, const OperatorSet& ops, SchemeKind kind,
                          ForcingSource forcing, const StepControl& control) {
  if (control.t_final < 0.0)
    throw std::invalid_argument("integrate: t_final must be non-negative");

  IntegrateResult result;
  result.state = v0;
  result.monitors.curl_recorded = control.record_curl;
  result.monitors.samples.push_back(sample_monitors(ops, v0, 0.0, control.record_curl));
  if (control.t_final == 0.0) {
    result.dt = 0.0;
    return result;
  }

  const SemidiscreteRhs rhs(model, grid, ops, kind, forcing);
  const double dt = control.dt > 0.0
                        ? control.dt
                        : select_dt(control.cfl, grid, model.velocity, model.epsilon,
                                    control.diffusion_safety);
  result.dt = dt;

  const long nsteps = static_cast<long>(std::ceil(control.t_final / dt - 1e-12));
  const int cadence = control.monitor_every > 0 ? control.monitor_every : 1;
  for (long step = 0; step < nsteps; ++step) {
    const double t = static_cast<double>(step) * dt;
    const double step_dt =
        step + 1 == nsteps ? control.t_final - t : dt;  // land exactly on t_final
    result.state = rk2_step(result.state, t, step_dt, rhs);
    ++result.steps;
    const double t_next = step + 1 == nsteps ? control.t_final : t + dt;
    const bool last = step + 1 == nsteps;
    if (last || (step + 1) % cadence == 0) {
      check_finite(result.state, t_next);
      result.monitors.samples.push_back(
          sample_monitors(ops, result.state, t_next, control.record_curl));
    }
  }
  return result;
}

}  // namespace sbpsat
