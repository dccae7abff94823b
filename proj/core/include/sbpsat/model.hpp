/// @file model.hpp
/// @brief Problem data for the resistive induction equations: velocity fields
/// with analytic partials, the zeroth-order coupling matrix C, manufactured
/// forcing, exact solutions, and boundary data evaluation.

#pragma once

#include <array>
#include <functional>
#include <optional>

#include "sbpsat/grid.hpp"
#include "sbpsat/tensor_ops.hpp"

namespace sbpsat {

/// Analytic velocity field u(x, t) with first partials for every axis.
struct VelocityField {
  int dimension = 2;
  bool time_dependent = false;

  /// u^comp at a point (unused trailing coordinates are zero).
  std::function<double(int comp, const std::array<double, 3>& x, double t)> component;
  /// d(u^comp)/d(x_axis) at a point.
  std::function<double(int comp, int axis, const std::array<double, 3>& x, double t)>
      partial;
};

/// u = (-y, x); divergence free, autonomous.
VelocityField rotation_velocity();
/// u = (-y, x, 0) on 3D grids.
VelocityField rotation_velocity_3d();
VelocityField constant_velocity(std::vector<double> u);
VelocityField zero_velocity(int dimension);

/// Closed-form reference solution (2D) with optional analytic derivatives.
struct ExactSolution {
  /// Everything the manufactured-solution residual needs at one point.
  struct PointData {
    std::array<double, 2> b;       // B
    std::array<double, 2> bt;      // dB/dt
    std::array<double, 2> bx;      // dB/dx
    std::array<double, 2> by;      // dB/dy
    double curl = 0.0;             // B2_x - B1_y
    double curl_x = 0.0;           // gradient of the curl
    double curl_y = 0.0;
  };

  bool rotation_based = false;
  bool has_analytic_derivatives = false;

  std::function<std::array<double, 2>(double x, double y, double t)> value;
  /// Present only when has_analytic_derivatives.
  std::function<PointData(double x, double y, double t)> derivatives;
};

/// The rotating hump B(x, t) = R(t) B0(R(-t) x), 2*pi periodic.
ExactSolution rotating_hump_solution();

enum class BcKind { Dirichlet, Mixed };
enum class ForcingSource { None, Printed, ResidualOracle };

struct ModelConfig {
  VelocityField velocity;
  double epsilon = 0.0;
  BcKind bc_kind = BcKind::Dirichlet;
  std::optional<ExactSolution> exact;
  /// Mixed-condition inflow weight from the continuous analysis; recorded but not
  /// used by the discrete scheme.
  std::optional<double> beta;

  /// epsilon >= 0, and mixed conditions require epsilon > 0.
  void validate() const;
};

/// B0(x, y) = 4 (-y, x - 1/2)^T exp(-20((x - 1/2)^2 + y^2)).
VectorField initial_hump(const GridSpec& grid);

/// Grid restriction of the rotating-hump solution at time t.
VectorField exact_rotating_hump(double t, const GridSpec& grid);

/// Node-wise C V with C built from the velocity's analytic partials.
VectorField apply_C(const VelocityField& velocity, double t, const VectorField& v);

/// The manufactured forcing exactly as printed, including the second
/// component's (y - 0.5 cos t) prefactor.
VectorField forcing_printed(double t, const GridSpec& grid, double epsilon);

/// Residual of the exact solution under the continuous operator:
/// F = dB/dt + u1 dB/dx + u2 dB/dy - C B + eps curl(curl B). Uses analytic
/// derivatives when the exact solution provides them, otherwise 6th-order
/// centered differences with spacing 1e-4 in space and time.
VectorField forcing_residual_oracle(double t, const GridSpec& grid, const ModelConfig& model);

/// Full-grid field holding the Dirichlet data g; zero when no exact solution
/// is configured. Only boundary-node values are consumed by the SAT terms.
VectorField boundary_dirichlet_data(double t, const GridSpec& grid, const ModelConfig& model);

/// Desired boundary curl h: the discrete curl applied to the exact solution's
/// grid restriction; zero when no exact solution is configured.
ScalarField boundary_mixed_data(double t, const GridSpec& grid, const ModelConfig& model,
                                const OperatorSet& ops);

}  // namespace sbpsat
