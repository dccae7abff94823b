#include "sbpsat/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbpsat {

GridSpec::GridSpec(std::vector<AxisSpec> axes) {
  if (axes.size() != 2 && axes.size() != 3)
    throw std::invalid_argument("GridSpec: expected 2 or 3 axes");
  dim_ = static_cast<int>(axes.size());
  for (int a = 0; a < dim_; ++a) {
    if (axes[static_cast<std::size_t>(a)].nodes < 2)
      throw std::invalid_argument("GridSpec: each axis needs at least 2 nodes");
    if (axes[static_cast<std::size_t>(a)].spacing <= 0.0)
      throw std::invalid_argument("GridSpec: spacing must be positive");
    axes_[static_cast<std::size_t>(a)] = axes[static_cast<std::size_t>(a)];
  }
}

GridSpec GridSpec::square(int nodes_per_axis, double lo, double hi) {
  return rectangle(nodes_per_axis, nodes_per_axis, lo, hi, lo, hi);
}

GridSpec GridSpec::cube(int nodes_per_axis, double lo, double hi) {
  return box(nodes_per_axis, nodes_per_axis, nodes_per_axis, {lo, hi, lo, hi, lo, hi});
}

GridSpec GridSpec::rectangle(int nx, int ny, double x0, double x1, double y0, double y1) {
  return GridSpec({AxisSpec{nx, (x1 - x0) / (nx - 1), x0},
                   AxisSpec{ny, (y1 - y0) / (ny - 1), y0}});
}

GridSpec GridSpec::box(int nx, int ny, int nz, std::array<double, 6> b) {
  return GridSpec({AxisSpec{nx, (b[1] - b[0]) / (nx - 1), b[0]},
                   AxisSpec{ny, (b[3] - b[2]) / (ny - 1), b[2]},
                   AxisSpec{nz, (b[5] - b[4]) / (nz - 1), b[4]}});
}

std::size_t GridSpec::num_nodes() const {
  std::size_t n = 1;
  for (int a = 0; a < dim_; ++a) n *= static_cast<std::size_t>(axes_[static_cast<std::size_t>(a)].nodes);
  return n;
}

double GridSpec::min_spacing() const {
  double h = axes_[0].spacing;
  for (int a = 1; a < dim_; ++a)
    h = std::min(h, axes_[static_cast<std::size_t>(a)].spacing);
  return h;
}

std::ptrdiff_t GridSpec::stride(int a) const {
  std::ptrdiff_t s = 1;
  for (int b = a + 1; b < dim_; ++b) s *= axes_[static_cast<std::size_t>(b)].nodes;
  return s;
}

bool GridSpec::operator==(const GridSpec& other) const {
  if (dim_ != other.dim_) return false;
  for (int a = 0; a < dim_; ++a)
    if (!(axes_[static_cast<std::size_t>(a)] == other.axes_[static_cast<std::size_t>(a)]))
      return false;
  return true;
}

void axpy(double a, const ScalarField& x, ScalarField& y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
  const std::size_t n = x.size();
  const double* xs = x.values.data();
  double* ys = y.values.data();
#pragma omp parallel for schedule(static) if (n > 4096)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    ys[i] += a * xs[i];
}

void axpy(double a, const VectorField& x, VectorField& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("axpy: component mismatch");
  for (int c = 0; c < x.dim(); ++c) axpy(a, x[c], y[c]);
}

}  // namespace sbpsat
