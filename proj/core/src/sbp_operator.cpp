#include "sbpsat/sbp_operator.hpp"

#include <stdexcept>
#include <string>

namespace sbpsat {

namespace {

// Bottom closure rows follow from the central symmetry of D: reverse the top
// block in both indices and flip the sign.
std::vector<double> mirror_closure(const std::vector<double>& top, int rows, int cols) {
  std::vector<double> bottom(top.size());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      bottom[static_cast<std::size_t>(r) * cols + c] =
          -top[static_cast<std::size_t>(rows - 1 - r) * cols + (cols - 1 - c)];
  return bottom;
}

}  // namespace

SbpOperator1D build_sbp2(int nodes, double spacing) {
  if (nodes < 3)
    throw std::invalid_argument("build_sbp2: need at least 3 nodes, got " +
                                std::to_string(nodes));
  if (spacing <= 0.0)
    throw std::invalid_argument("build_sbp2: spacing must be positive");

  SbpOperator1D op;
  op.nodes = nodes;
  op.spacing = spacing;
  op.interior_order = 2;
  op.boundary_order = 1;
  op.boundary_width = 1;
  op.closure_cols = 2;
  op.p_corner = 1.0 / 2.0;

  op.p_weights.assign(static_cast<std::size_t>(nodes), 1.0);
  op.p_weights.front() = 1.0 / 2.0;
  op.p_weights.back() = 1.0 / 2.0;

  const double hi = 1.0 / spacing;
  op.top_closure = {-1.0 * hi, 1.0 * hi};
  op.interior_stencil = {-0.5 * hi, 0.0, 0.5 * hi};
  op.bottom_closure = mirror_closure(op.top_closure, op.boundary_width, op.closure_cols);
  return op;
}

SbpOperator1D build_sbp4(int nodes, double spacing) {
  if (nodes < 9)
    throw std::invalid_argument("build_sbp4: need at least 9 nodes, got " +
                                std::to_string(nodes));
  if (spacing <= 0.0)
    throw std::invalid_argument("build_sbp4: spacing must be positive");

  SbpOperator1D op;
  op.nodes = nodes;
  op.spacing = spacing;
  op.interior_order = 4;
  op.boundary_order = 2;
  op.boundary_width = 4;
  op.closure_cols = 6;
  op.p_corner = 17.0 / 48.0;

  op.p_weights.assign(static_cast<std::size_t>(nodes), 1.0);
  const double pw[4] = {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0};
  for (int i = 0; i < 4; ++i) {
    op.p_weights[static_cast<std::size_t>(i)] = pw[i];
    op.p_weights[static_cast<std::size_t>(nodes - 1 - i)] = pw[i];
  }

  // Coefficients evaluated from the exact rationals; no decimal truncation.
  const double hi = 1.0 / spacing;
  op.top_closure = {
      -24.0 / 17.0 * hi, 59.0 / 34.0 * hi,  -4.0 / 17.0 * hi, -3.0 / 34.0 * hi, 0.0, 0.0,
      -1.0 / 2.0 * hi,   0.0,               1.0 / 2.0 * hi,   0.0,              0.0, 0.0,
      4.0 / 43.0 * hi,   -59.0 / 86.0 * hi, 0.0,              59.0 / 86.0 * hi,
      -4.0 / 43.0 * hi,  0.0,
      3.0 / 98.0 * hi,   0.0,               -59.0 / 98.0 * hi, 0.0,
      32.0 / 49.0 * hi,  -4.0 / 49.0 * hi,
  };
  op.interior_stencil = {1.0 / 12.0 * hi, -2.0 / 3.0 * hi, 0.0, 2.0 / 3.0 * hi,
                         -1.0 / 12.0 * hi};
  op.bottom_closure = mirror_closure(op.top_closure, op.boundary_width, op.closure_cols);
  return op;
}

void apply_derivative_line(const SbpOperator1D& op, const double* in, double* out,
                           std::ptrdiff_t stride) {
  const int n = op.nodes;
  const int bw = op.boundary_width;
  const int cols = op.closure_cols;

  for (int r = 0; r < bw; ++r) {
    const double* row = op.top_closure.data() + static_cast<std::size_t>(r) * cols;
    double acc = 0.0;
    for (int c = 0; c < cols; ++c) acc += row[c] * in[c * stride];
    out[r * stride] = acc;
  }

  const double* s = op.interior_stencil.data();
  if (op.interior_stencil.size() == 3) {
    const double sm = s[0], sp = s[2];
    for (int i = bw; i < n - bw; ++i)
      out[i * stride] = sm * in[(i - 1) * stride] + sp * in[(i + 1) * stride];
  } else if (op.interior_stencil.size() == 5) {
    const double s0 = s[0], s1 = s[1], s3 = s[3], s4 = s[4];
    for (int i = bw; i < n - bw; ++i)
      out[i * stride] = s0 * in[(i - 2) * stride] + s1 * in[(i - 1) * stride] +
                        s3 * in[(i + 1) * stride] + s4 * in[(i + 2) * stride];
  } else {
    const int half = static_cast<int>(op.interior_stencil.size()) / 2;
    const int width = static_cast<int>(op.interior_stencil.size());
    for (int i = bw; i < n - bw; ++i) {
      double acc = 0.0;
      for (int k = 0; k < width; ++k) acc += s[k] * in[(i - half + k) * stride];
      out[i * stride] = acc;
    }
  }

  const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(n - cols);
  for (int r = 0; r < bw; ++r) {
    const double* row = op.bottom_closure.data() + static_cast<std::size_t>(r) * cols;
    double acc = 0.0;
    for (int c = 0; c < cols; ++c) acc += row[c] * in[(base + c) * stride];
    out[(n - bw + r) * stride] = acc;
  }
}

std::vector<double> apply_derivative(const SbpOperator1D& op, std::span<const double> w) {
  if (static_cast<int>(w.size()) != op.nodes)
    throw std::invalid_argument("apply_derivative: length mismatch");
  std::vector<double> out(w.size());
  apply_derivative_line(op, w.data(), out.data(), 1);
  return out;
}

double inner_product_1d(const SbpOperator1D& op, std::span<const double> v,
                        std::span<const double> w) {
  if (static_cast<int>(v.size()) != op.nodes || static_cast<int>(w.size()) != op.nodes)
    throw std::invalid_argument("inner_product_1d: length mismatch");
  double acc = 0.0;
  for (int i = 0; i < op.nodes; ++i)
    acc += op.p_weights[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)] *
           w[static_cast<std::size_t>(i)];
  return op.spacing * acc;
}

}  // namespace sbpsat
