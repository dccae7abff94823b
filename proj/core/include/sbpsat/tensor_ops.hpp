/// @file tensor_ops.hpp
/// @brief Matrix-free Kronecker application of 1D operators on tensor grids.
///
/// The 2D operators are d_x = D_x (x) I_M and d_y = I_N (x) D_y (plus d_z in
/// 3D); each 1D operator acts along its own index via line sweeps. The dense
/// Kronecker matrices appear only in test oracles.

#pragma once

#include "sbpsat/grid.hpp"
#include "sbpsat/sbp_operator.hpp"

namespace sbpsat {

/// One 1D operator per grid axis, sized to that axis.
struct OperatorSet {
  std::vector<SbpOperator1D> axis_ops;

  const SbpOperator1D& op(int axis) const {
    return axis_ops[static_cast<std::size_t>(axis)];
  }
  int dim() const { return static_cast<int>(axis_ops.size()); }
};

/// Build per-axis operators of the given interior order (2 or 4).
OperatorSet make_operators(const GridSpec& grid, int order);

/// Apply the 1D derivative along one axis to every grid line of the field.
ScalarField apply_d_axis(const OperatorSet& ops, int axis, const ScalarField& w);

/// (v, w)_P with weight prod_axes(h_a * p_a[i_a]) per node.
double inner_product_P(const OperatorSet& ops, const ScalarField& v, const ScalarField& w);
/// Vector version: sum of component inner products.
double inner_product_P(const OperatorSet& ops, const VectorField& v, const VectorField& w);
double norm_P(const OperatorSet& ops, const ScalarField& w);
double norm_P(const OperatorSet& ops, const VectorField& w);

/// <v, w>_face: sum over face nodes weighted by the tangential norm weights
/// (no weight along the face-normal axis). Positive semi-definite.
double face_inner(const OperatorSet& ops, Face face, const ScalarField& v,
                  const ScalarField& w);

/// d_x V^2 - d_y V^1 on a 2-component field.
ScalarField curl_2d(const OperatorSet& ops, const VectorField& v);

/// (-d_yy V^1 + d_xy V^2, d_xy V^1 - d_xx V^2), first-derivative operators
/// applied twice.
VectorField curlcurl_2d(const OperatorSet& ops, const VectorField& v);

/// 3D curl of curl, rows d_y(d_x V^2 - d_y V^1) - d_z(d_z V^1 - d_x V^3) etc.
VectorField curlcurl_3d(const OperatorSet& ops, const VectorField& v);

/// d_x V^1 + d_y V^2 (+ d_z V^3 in 3D).
ScalarField div_P(const OperatorSet& ops, const VectorField& v);

namespace detail {

// Second applications of the displayed curl-of-curl products, starting from
// first derivatives the caller already holds.
VectorField curlcurl_2d_from(const OperatorSet& ops, const ScalarField& dy_v1,
                             const ScalarField& dy_v2, const ScalarField& dx_v2);
VectorField curlcurl_3d_from(const OperatorSet& ops, const ScalarField& w1,
                             const ScalarField& w2, const ScalarField& w3);

}  // namespace detail

}  // namespace sbpsat
