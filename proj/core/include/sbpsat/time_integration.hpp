/// @file time_integration.hpp
/// @brief Explicit second-order Runge-Kutta (Heun) time stepping with
/// stability-aware step selection and in-flight monitors.

#pragma once

#include <stdexcept>
#include <string>

#include "sbpsat/sat_scheme.hpp"

namespace sbpsat {

struct StepControl {
  double cfl = 0.5;
  double t_final = 0.0;
  /// Explicit step; 0 means derive it with select_dt.
  double dt = 0.0;
  /// Safety factor on the parabolic limit h^2/(4 eps).
  double diffusion_safety = 0.9;
  /// Monitor cadence in steps; first and last samples always recorded.
  int monitor_every = 10;
  bool record_curl = false;
};

struct MonitorSample {
  double t = 0.0;
  double energy = 0.0;           // (V, V)_P
  double divergence_norm = 0.0;  // ||div_P V|| in the uniform-weight l2 norm
  double curl_norm = 0.0;        // ||curl V||_P, recorded on request (2D)
};

struct RunMonitors {
  std::vector<MonitorSample> samples;
  bool curl_recorded = false;
};

/// Thrown when the state stops being finite; carries time and node location.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(double time, std::array<double, 3> location, const std::string& what)
      : std::runtime_error(what), time(time), location(location) {}
  double time;
  std::array<double, 3> location;
};

/// dt = cfl * min(h_min / max|u|, diffusion_safety * h_min^2 / (4 eps)); the
/// parabolic term is dropped when eps = 0. max|u| is the Euclidean velocity
/// magnitude maximized over grid nodes at t = 0, floored at 1e-12.
double select_dt(double cfl, const GridSpec& grid, const VelocityField& velocity,
                 double epsilon, double diffusion_safety = 0.9);

/// One Heun step: k1 = rhs(V, t), k2 = rhs(V + dt k1, t + dt),
/// V+ = V + dt/2 (k1 + k2).
template <typename Rhs>
VectorField rk2_step(const VectorField& v, double t, double dt, Rhs&& rhs) {
  if (dt <= 0.0) throw std::invalid_argument("rk2_step: dt must be positive");
  const VectorField k1 = rhs(v, t);
  VectorField stage = v;
  axpy(dt, k1, stage);
  const VectorField k2 = rhs(stage, t + dt);
  VectorField next = v;
  axpy(0.5 * dt, k1, next);
  axpy(0.5 * dt, k2, next);
  return next;
}

struct IntegrateResult {
  VectorField state;
  RunMonitors monitors;
  double dt = 0.0;
  long steps = 0;
};

/// Step from t = 0 to t_final, truncating the last step to land exactly on
/// t_final. Throws InstabilityError when the state stops being finite.
IntegrateResult integrate(const VectorField& v0, const ModelConfig& model,
                          const GridSpec& grid, const OperatorSet& ops, SchemeKind kind,
                          ForcingSource forcing, const StepControl& control);

}  // namespace sbpsat
