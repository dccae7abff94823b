#include "sbpsat/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sbpsat {

VelocityField rotation_velocity() {
  VelocityField u;
  u.dimension = 2;
  u.time_dependent = false;
  u.component = [](int comp, const std::array<double, 3>& x, double) {
    return comp == 0 ? -x[1] : x[0];
  };
  u.partial = [](int comp, int axis, const std::array<double, 3>&, double) {
    if (comp == 0 && axis == 1) return -1.0;
    if (comp == 1 && axis == 0) return 1.0;
    return 0.0;
  };
  return u;
}

VelocityField rotation_velocity_3d() {
  VelocityField u;
  u.dimension = 3;
  u.time_dependent = false;
  u.component = [](int comp, const std::array<double, 3>& x, double) {
    if (comp == 0) return -x[1];
    if (comp == 1) return x[0];
    return 0.0;
  };
  u.partial = [](int comp, int axis, const std::array<double, 3>&, double) {
    if (comp == 0 && axis == 1) return -1.0;
    if (comp == 1 && axis == 0) return 1.0;
    return 0.0;
  };
  return u;
}

VelocityField constant_velocity(std::vector<double> uvals) {
  VelocityField u;
  u.dimension = static_cast<int>(uvals.size());
  u.time_dependent = false;
  u.component = [uvals](int comp, const std::array<double, 3>&, double) {
    return uvals[static_cast<std::size_t>(comp)];
  };
  u.partial = [](int, int, const std::array<double, 3>&, double) { return 0.0; };
  return u;
}

VelocityField zero_velocity(int dimension) {
  return constant_velocity(std::vector<double>(static_cast<std::size_t>(dimension), 0.0));
}

namespace {

// In the co-rotating frame the hump is a translated vortex profile:
// B(x, y, t) = 4 (-b, a)^T G with a = x - cos(t)/2, b = y - sin(t)/2 and
// G = exp(-20 (a^2 + b^2)).
ExactSolution::PointData hump_point(double x, double y, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double a = x - 0.5 * c;
  const double b = y - 0.5 * s;
  const double r2 = a * a + b * b;
  const double g = std::exp(-20.0 * r2);

  ExactSolution::PointData d;
  d.b = {-4.0 * b * g, 4.0 * a * g};
  d.bx = {160.0 * a * b * g, (4.0 - 160.0 * a * a) * g};
  d.by = {(-4.0 + 160.0 * b * b) * g, -160.0 * a * b * g};
  const double gt = -40.0 * (a * 0.5 * s - b * 0.5 * c) * g;
  d.bt = {2.0 * c * g - 4.0 * b * gt, 2.0 * s * g + 4.0 * a * gt};
  d.curl = (8.0 - 160.0 * r2) * g;
  d.curl_x = 160.0 * a * (40.0 * r2 - 4.0) * g;
  d.curl_y = 160.0 * b * (40.0 * r2 - 4.0) * g;
  return d;
}

}  // namespace

ExactSolution rotating_hump_solution() {
  ExactSolution ex;
  ex.rotation_based = true;
  ex.has_analytic_derivatives = true;
  ex.value = [](double x, double y, double t) { return hump_point(x, y, t).b; };
  ex.derivatives = [](double x, double y, double t) { return hump_point(x, y, t); };
  return ex;
}

void ModelConfig::validate() const {
  if (epsilon < 0.0) throw std::invalid_argument("ModelConfig: epsilon must be >= 0");
  if (bc_kind == BcKind::Mixed && epsilon <= 0.0)
    throw std::invalid_argument("ModelConfig: mixed boundary conditions require epsilon > 0");
}

VectorField initial_hump(const GridSpec& grid) {
  if (grid.dim() != 2) throw std::invalid_argument("initial_hump: expected a 2D grid");
  VectorField out(grid);
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
  for (int i = 0; i < n; ++i) {
    const double x = grid.axis(0).coord(i);
    for (int j = 0; j < m; ++j) {
      const double y = grid.axis(1).coord(j);
      const double g =
          std::exp(-20.0 * ((x - 0.5) * (x - 0.5) + y * y));
      const std::size_t idx = grid.index(i, j);
      out[0][idx] = 4.0 * (-y) * g;
      out[1][idx] = 4.0 * (x - 0.5) * g;
    }
  }
  return out;
}

VectorField exact_rotating_hump(double t, const GridSpec& grid) {
  if (grid.dim() != 2) throw std::invalid_argument("exact_rotating_hump: expected a 2D grid");
  const ExactSolution ex = rotating_hump_solution();
  VectorField out(grid);
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
  for (int i = 0; i < n; ++i) {
    const double x = grid.axis(0).coord(i);
    for (int j = 0; j < m; ++j) {
      const std::array<double, 2> b = ex.value(x, grid.axis(1).coord(j), t);
      const std::size_t idx = grid.index(i, j);
      out[0][idx] = b[0];
      out[1][idx] = b[1];
    }
  }
  return out;
}

VectorField apply_C(const VelocityField& velocity, double t, const VectorField& v) {
  const GridSpec& grid = v.grid();
  if (velocity.dimension != grid.dim() || v.dim() != grid.dim())
    throw std::invalid_argument("apply_C: dimension mismatch");

  VectorField out(grid);
  if (grid.dim() == 2) {
    const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        const std::array<double, 3> x{grid.axis(0).coord(i), grid.axis(1).coord(j), 0.0};
        const double u1x = velocity.partial(0, 0, x, t);
        const double u1y = velocity.partial(0, 1, x, t);
        const double u2x = velocity.partial(1, 0, x, t);
        const double u2y = velocity.partial(1, 1, x, t);
        const std::size_t idx = grid.index(i, j);
        out[0][idx] = -u2y * v[0][idx] + u1y * v[1][idx];
        out[1][idx] = u2x * v[0][idx] - u1x * v[1][idx];
      }
    }
    return out;
  }
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes, k = grid.axis(2).nodes;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int l = 0; l < k; ++l) {
        const std::array<double, 3> x{grid.axis(0).coord(i), grid.axis(1).coord(j),
                                      grid.axis(2).coord(l)};
        const double u1x = velocity.partial(0, 0, x, t);
        const double u1y = velocity.partial(0, 1, x, t);
        const double u1z = velocity.partial(0, 2, x, t);
        const double u2x = velocity.partial(1, 0, x, t);
        const double u2y = velocity.partial(1, 1, x, t);
        const double u2z = velocity.partial(1, 2, x, t);
        const double u3x = velocity.partial(2, 0, x, t);
        const double u3y = velocity.partial(2, 1, x, t);
        const double u3z = velocity.partial(2, 2, x, t);
        const std::size_t idx = grid.index(i, j, l);
        const double v1 = v[0][idx], v2 = v[1][idx], v3 = v[2][idx];
        out[0][idx] = (-u2y - u3z) * v1 + u1y * v2 + u1z * v3;
        out[1][idx] = u2x * v1 + (-u1x - u3z) * v2 + u2z * v3;
        out[2][idx] = u3x * v1 + u3y * v2 + (-u1x - u2y) * v3;
      }
    }
  }
  return out;
}

VectorField forcing_printed(double t, const GridSpec& grid, double epsilon) {
  if (grid.dim() != 2) throw std::invalid_argument("forcing_printed: expected a 2D grid");
  VectorField out(grid);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
  for (int i = 0; i < n; ++i) {
    const double x = grid.axis(0).coord(i);
    for (int j = 0; j < m; ++j) {
      const double y = grid.axis(1).coord(j);
      const double a_exp = -20.0 * ((x * c + y * s - 0.5) * (x * c + y * s - 0.5) +
                                    (-x * s + y * c) * (-x * s + y * c));
      const double bracket = -4.0 + 40.0 * ((x - 0.5 * c) * (x - 0.5 * c) +
                                            (y - 0.5 * s) * (y - 0.5 * s));
      const double e = std::exp(a_exp);
      const std::size_t idx = grid.index(i, j);
      out[0][idx] = 160.0 * epsilon * (y - 0.5 * s) * bracket * e;
      out[1][idx] = -160.0 * epsilon * (y - 0.5 * c) * bracket * e;
    }
  }
  return out;
}

namespace {

// 6th-order centered first derivative over 7 samples of a callable.
template <typename F>
double fd6(F&& f, double step) {
  return (-f(-3.0) + 9.0 * f(-2.0) - 45.0 * f(-1.0) + 45.0 * f(1.0) - 9.0 * f(2.0) +
          f(3.0)) /
         (60.0 * step);
}

ExactSolution::PointData numeric_point_data(const ExactSolution& ex, double x, double y,
                                            double t) {
  constexpr double delta = 1e-4;
  ExactSolution::PointData d;
  d.b = ex.value(x, y, t);
  for (int comp = 0; comp < 2; ++comp) {
    const std::size_t c = static_cast<std::size_t>(comp);
    d.bt[c] = fd6([&](double k) { return ex.value(x, y, t + k * delta)[c]; }, delta);
    d.bx[c] = fd6([&](double k) { return ex.value(x + k * delta, y, t)[c]; }, delta);
    d.by[c] = fd6([&](double k) { return ex.value(x, y + k * delta, t)[c]; }, delta);
  }
  auto curl_at = [&](double xx, double yy) {
    const double b2x = fd6([&](double k) { return ex.value(xx + k * delta, yy, t)[1]; }, delta);
    const double b1y = fd6([&](double k) { return ex.value(xx, yy + k * delta, t)[0]; }, delta);
    return b2x - b1y;
  };
  d.curl = curl_at(x, y);
  d.curl_x = fd6([&](double k) { return curl_at(x + k * delta, y); }, delta);
  d.curl_y = fd6([&](double k) { return curl_at(x, y + k * delta); }, delta);
  return d;
}

}  // namespace

VectorField forcing_residual_oracle(double t, const GridSpec& grid, const ModelConfig& model) {
  if (grid.dim() != 2)
    throw std::invalid_argument("forcing_residual_oracle: expected a 2D grid");
  if (!model.exact)
    throw std::invalid_argument("forcing_residual_oracle: model has no exact solution");

  const ExactSolution& ex = *model.exact;
  VectorField out(grid);
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double x = grid.axis(0).coord(i);
    for (int j = 0; j < m; ++j) {
      const double y = grid.axis(1).coord(j);
      const ExactSolution::PointData d = ex.has_analytic_derivatives
                                             ? ex.derivatives(x, y, t)
                                             : numeric_point_data(ex, x, y, t);
      const std::array<double, 3> xp{x, y, 0.0};
      const double u1 = model.velocity.component(0, xp, t);
      const double u2 = model.velocity.component(1, xp, t);
      const double u1x = model.velocity.partial(0, 0, xp, t);
      const double u1y = model.velocity.partial(0, 1, xp, t);
      const double u2x = model.velocity.partial(1, 0, xp, t);
      const double u2y = model.velocity.partial(1, 1, xp, t);
      // curl(curl B) = (d curl/dy, -d curl/dx).
      const std::size_t idx = grid.index(i, j);
      out[0][idx] = d.bt[0] + u1 * d.bx[0] + u2 * d.by[0] -
                    (-u2y * d.b[0] + u1y * d.b[1]) + model.epsilon * d.curl_y;
      out[1][idx] = d.bt[1] + u1 * d.bx[1] + u2 * d.by[1] -
                    (u2x * d.b[0] - u1x * d.b[1]) - model.epsilon * d.curl_x;
    }
  }
  return out;
}

VectorField boundary_dirichlet_data(double t, const GridSpec& grid, const ModelConfig& model) {
  VectorField out(grid);
  if (!model.exact) return out;
  const ExactSolution& ex = *model.exact;
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
  for (int i = 0; i < n; ++i) {
    const double x = grid.axis(0).coord(i);
    for (int j = 0; j < m; ++j) {
      const std::array<double, 2> b = ex.value(x, grid.axis(1).coord(j), t);
      const std::size_t idx = grid.index(i, j);
      out[0][idx] = b[0];
      out[1][idx] = b[1];
    }
  }
  return out;
}

ScalarField boundary_mixed_data(double t, const GridSpec& grid, const ModelConfig& model,
                                const OperatorSet& ops) {
  if (!model.exact) return ScalarField(grid);
  VectorField b = boundary_dirichlet_data(t, grid, model);
  return curl_2d(ops, b);
}

}  // namespace sbpsat
