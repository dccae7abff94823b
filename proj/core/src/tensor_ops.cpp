#include "sbpsat/tensor_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace sbpsat {

namespace {

void check_grid(const OperatorSet& ops, const GridSpec& grid) {
  if (ops.dim() != grid.dim())
    throw std::invalid_argument("operator set does not match grid dimension");
  for (int a = 0; a < grid.dim(); ++a)
    if (ops.op(a).nodes != grid.axis(a).nodes)
      throw std::invalid_argument("operator set does not match grid size");
}

void check_components(const VectorField& v) {
  if (v.dim() != v.grid().dim())
    throw std::invalid_argument("vector field component count does not match grid dimension");
}

}  // namespace

OperatorSet make_operators(const GridSpec& grid, int order) {
  OperatorSet ops;
  for (int a = 0; a < grid.dim(); ++a) {
    const AxisSpec& ax = grid.axis(a);
    if (order == 2)
      ops.axis_ops.push_back(build_sbp2(ax.nodes, ax.spacing));
    else if (order == 4)
      ops.axis_ops.push_back(build_sbp4(ax.nodes, ax.spacing));
    else
      throw std::invalid_argument("make_operators: order must be 2 or 4");
  }
  return ops;
}

ScalarField apply_d_axis(const OperatorSet& ops, int axis, const ScalarField& w) {
  const GridSpec& grid = w.grid;
  check_grid(ops, grid);
  if (axis < 0 || axis >= grid.dim())
    throw std::invalid_argument("apply_d_axis: axis out of range");

  const SbpOperator1D& op = ops.op(axis);
  const std::ptrdiff_t stride = grid.stride(axis);
  const std::ptrdiff_t post = stride;  // lines with unit offset inside one block
  std::ptrdiff_t pre = 1;
  for (int b = 0; b < axis; ++b) pre *= grid.axis(b).nodes;
  const std::ptrdiff_t block = static_cast<std::ptrdiff_t>(op.nodes) * post;
  const std::ptrdiff_t nlines = pre * post;

  ScalarField out(grid);
  const double* in = w.values.data();
  double* res = out.values.data();
#pragma omp parallel for schedule(static) if (nlines > 8)
  for (std::ptrdiff_t line = 0; line < nlines; ++line) {
    const std::ptrdiff_t start = (line / post) * block + (line % post);
    apply_derivative_line(op, in + start, res + start, stride);
  }
  return out;
}

double inner_product_P(const OperatorSet& ops, const ScalarField& v, const ScalarField& w) {
  if (!(v.grid == w.grid)) throw std::invalid_argument("inner_product_P: grid mismatch");
  const GridSpec& grid = v.grid;
  check_grid(ops, grid);

  // Serial reduction for bit-exact reproducibility of norms.
  double acc = 0.0;
  if (grid.dim() == 2) {
    const auto& px = ops.op(0).p_weights;
    const auto& py = ops.op(1).p_weights;
    const int n = grid.axis(0).nodes, m = grid.axis(1).nodes;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < m; ++j, ++idx)
        row += py[static_cast<std::size_t>(j)] * v[idx] * w[idx];
      acc += px[static_cast<std::size_t>(i)] * row;
    }
    return grid.axis(0).spacing * grid.axis(1).spacing * acc;
  }
  const auto& px = ops.op(0).p_weights;
  const auto& py = ops.op(1).p_weights;
  const auto& pz = ops.op(2).p_weights;
  const int n = grid.axis(0).nodes, m = grid.axis(1).nodes, k = grid.axis(2).nodes;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    double slab = 0.0;
    for (int j = 0; j < m; ++j) {
      double row = 0.0;
      for (int l = 0; l < k; ++l, ++idx)
        row += pz[static_cast<std::size_t>(l)] * v[idx] * w[idx];
      slab += py[static_cast<std::size_t>(j)] * row;
    }
    acc += px[static_cast<std::size_t>(i)] * slab;
  }
  return grid.axis(0).spacing * grid.axis(1).spacing * grid.axis(2).spacing * acc;
}

double inner_product_P(const OperatorSet& ops, const VectorField& v, const VectorField& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("inner_product_P: component mismatch");
  double acc = 0.0;
  for (int c = 0; c < v.dim(); ++c) acc += inner_product_P(ops, v[c], w[c]);
  return acc;
}

double norm_P(const OperatorSet& ops, const ScalarField& w) {
  return std::sqrt(inner_product_P(ops, w, w));
}

double norm_P(const OperatorSet& ops, const VectorField& w) {
  return std::sqrt(inner_product_P(ops, w, w));
}

double face_inner(const OperatorSet& ops, Face face, const ScalarField& v,
                  const ScalarField& w) {
  if (!(v.grid == w.grid)) throw std::invalid_argument("face_inner: grid mismatch");
  const GridSpec& grid = v.grid;
  check_grid(ops, grid);
  const int axis = face_axis(face);
  if (axis >= grid.dim())
    throw std::invalid_argument("face_inner: face not present in this grid dimension");

  const int fixed = face_is_high(face) ? grid.axis(axis).nodes - 1 : 0;
  const std::ptrdiff_t post = grid.stride(axis);
  std::ptrdiff_t pre = 1;
  for (int b = 0; b < axis; ++b) pre *= grid.axis(b).nodes;
  const std::ptrdiff_t block = static_cast<std::ptrdiff_t>(grid.axis(axis).nodes) * post;

  // Tangential weights factor over the axes before and after the face axis.
  auto weight_table = [&](int from, int to) {
    std::vector<double> t{1.0};
    for (int b = from; b < to; ++b) {
      const auto& pb = ops.op(b).p_weights;
      const double hb = grid.axis(b).spacing;
      std::vector<double> next;
      next.reserve(t.size() * pb.size());
      for (double tv : t)
        for (double pv : pb) next.push_back(tv * hb * pv);
      t = std::move(next);
    }
    return t;
  };
  const std::vector<double> wpre = weight_table(0, axis);
  const std::vector<double> wpost = weight_table(axis + 1, grid.dim());

  double acc = 0.0;
  for (std::ptrdiff_t o = 0; o < pre; ++o) {
    const std::ptrdiff_t base = o * block + fixed * post;
    double row = 0.0;
    for (std::ptrdiff_t i = 0; i < post; ++i) {
      const std::size_t idx = static_cast<std::size_t>(base + i);
      row += wpost[static_cast<std::size_t>(i)] * v[idx] * w[idx];
    }
    acc += wpre[static_cast<std::size_t>(o)] * row;
  }
  return acc;
}

ScalarField curl_2d(const OperatorSet& ops, const VectorField& v) {
  check_components(v);
  if (v.dim() != 2) throw std::invalid_argument("curl_2d: expected a 2-component field");
  ScalarField dxv2 = apply_d_axis(ops, 0, v[1]);
  ScalarField dyv1 = apply_d_axis(ops, 1, v[0]);
  ScalarField out(v.grid());
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = dxv2[i] - dyv1[i];
  return out;
}

namespace detail {

VectorField curlcurl_2d_from(const OperatorSet& ops, const ScalarField& dy_v1,
                             const ScalarField& dy_v2, const ScalarField& dx_v2) {
  const GridSpec& grid = dy_v1.grid;
  VectorField out(grid);
  ScalarField dyy_v1 = apply_d_axis(ops, 1, dy_v1);
  ScalarField dxy_v2 = apply_d_axis(ops, 0, dy_v2);
  ScalarField dxy_v1 = apply_d_axis(ops, 0, dy_v1);
  ScalarField dxx_v2 = apply_d_axis(ops, 0, dx_v2);
  const std::size_t n = grid.num_nodes();
  for (std::size_t i = 0; i < n; ++i) {
    out[0][i] = -dyy_v1[i] + dxy_v2[i];
    out[1][i] = dxy_v1[i] - dxx_v2[i];
  }
  return out;
}

VectorField curlcurl_3d_from(const OperatorSet& ops, const ScalarField& w1,
                             const ScalarField& w2, const ScalarField& w3) {
  const GridSpec& grid = w1.grid;
  VectorField out(grid);
  ScalarField dy_w3 = apply_d_axis(ops, 1, w3);
  ScalarField dz_w2 = apply_d_axis(ops, 2, w2);
  ScalarField dz_w1 = apply_d_axis(ops, 2, w1);
  ScalarField dx_w3 = apply_d_axis(ops, 0, w3);
  ScalarField dx_w2 = apply_d_axis(ops, 0, w2);
  ScalarField dy_w1 = apply_d_axis(ops, 1, w1);
  const std::size_t n = grid.num_nodes();
  for (std::size_t i = 0; i < n; ++i) {
    out[0][i] = dy_w3[i] - dz_w2[i];
    out[1][i] = dz_w1[i] - dx_w3[i];
    out[2][i] = dx_w2[i] - dy_w1[i];
  }
  return out;
}

}  // namespace detail

VectorField curlcurl_2d(const OperatorSet& ops, const VectorField& v) {
  check_components(v);
  if (v.dim() != 2) throw std::invalid_argument("curlcurl_2d: expected a 2-component field");
  ScalarField dy_v1 = apply_d_axis(ops, 1, v[0]);
  ScalarField dy_v2 = apply_d_axis(ops, 1, v[1]);
  ScalarField dx_v2 = apply_d_axis(ops, 0, v[1]);
  return detail::curlcurl_2d_from(ops, dy_v1, dy_v2, dx_v2);
}

VectorField curlcurl_3d(const OperatorSet& ops, const VectorField& v) {
  check_components(v);
  if (v.dim() != 3) throw std::invalid_argument("curlcurl_3d: expected a 3-component field");
  ScalarField dy_v3 = apply_d_axis(ops, 1, v[2]);
  ScalarField dz_v2 = apply_d_axis(ops, 2, v[1]);
  ScalarField dz_v1 = apply_d_axis(ops, 2, v[0]);
  ScalarField dx_v3 = apply_d_axis(ops, 0, v[2]);
  ScalarField dx_v2 = apply_d_axis(ops, 0, v[1]);
  ScalarField dy_v1 = apply_d_axis(ops, 1, v[0]);

  const GridSpec& grid = v.grid();
  ScalarField w1(grid), w2(grid), w3(grid);
  const std::size_t n = grid.num_nodes();
  for (std::size_t i = 0; i < n; ++i) {
    w1[i] = dy_v3[i] - dz_v2[i];
    w2[i] = dz_v1[i] - dx_v3[i];
    w3[i] = dx_v2[i] - dy_v1[i];
  }
  return detail::curlcurl_3d_from(ops, w1, w2, w3);
}

ScalarField div_P(const OperatorSet& ops, const VectorField& v) {
  check_components(v);
  ScalarField out = apply_d_axis(ops, 0, v[0]);
  for (int a = 1; a < v.dim(); ++a) {
    ScalarField da = apply_d_axis(ops, a, v[a]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += da[i];
  }
  return out;
}

}  // namespace sbpsat
