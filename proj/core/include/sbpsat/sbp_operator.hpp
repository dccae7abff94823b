/// @file sbp_operator.hpp
/// @brief 1D summation-by-parts first-derivative operators with diagonal norms.
///
/// An operator is the pair (P, Q) with D = P^{-1} Q, stored matrix-free:
/// dense closure rows at both ends plus a centered interior stencil. The
/// diagonal norm P = h * diag(p_weights) defines the discrete inner product,
/// and Q + Q^T = diag(-1, 0, ..., 0, 1) is the summation-by-parts property.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sbpsat {

struct SbpOperator1D {
  int nodes = 0;
  double spacing = 0.0;

  /// Diagonal of P divided by the spacing; all entries positive.
  std::vector<double> p_weights;

  /// Rows affected by the boundary closure at each end (SBP2: 1, SBP4: 4).
  int boundary_width = 0;
  /// Columns touched by each closure block (SBP2: 2, SBP4: 6).
  int closure_cols = 0;
  /// Top closure rows, row-major boundary_width x closure_cols, 1/h included.
  std::vector<double> top_closure;
  /// Bottom closure: the top block reversed in both indices with sign flipped.
  std::vector<double> bottom_closure;
  /// Centered interior stencil (odd length), 1/h included.
  std::vector<double> interior_stencil;

  /// First norm weight, shared by both ends (SBP2: 1/2, SBP4: 17/48).
  double p_corner = 0.0;
  int interior_order = 0;
  int boundary_order = 0;
};

/// Second-order interior / first-order boundary operator. Requires nodes >= 3.
SbpOperator1D build_sbp2(int nodes, double spacing);

/// Fourth-order interior / second-order boundary operator. Requires nodes >= 9
/// so the two closure blocks stay disjoint with at least one interior row.
SbpOperator1D build_sbp4(int nodes, double spacing);

/// D*w for one grid line with arbitrary stride; in and out must not alias.
void apply_derivative_line(const SbpOperator1D& op, const double* in, double* out,
                           std::ptrdiff_t stride);

/// D*w, matrix-free. Throws on length mismatch.
std::vector<double> apply_derivative(const SbpOperator1D& op, std::span<const double> w);

/// (v, w)_P = sum_i h * p_i * v_i * w_i. Throws on length mismatch.
double inner_product_1d(const SbpOperator1D& op, std::span<const double> v,
                        std::span<const double> w);

}  // namespace sbpsat
