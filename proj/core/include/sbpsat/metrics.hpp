/// @file metrics.hpp
/// @brief Error metrics for the experiment harness.
///
/// ||w||_2 is the discrete 2-norm with uniform per-node weight (dx in 1D,
/// dx*dy in 2D); the weight cancels in relative errors.

#pragma once

#include "sbpsat/grid.hpp"
#include "sbpsat/tensor_ops.hpp"

namespace sbpsat {

/// Uniform-weight l2 norm of a scalar grid function.
double l2_norm_uniform(const ScalarField& w);
/// Stacked-component version.
double l2_norm_uniform(const VectorField& w);

/// ||num - ex||_2 / ||ex||_2 * 100 over stacked components.
/// Throws when the reference norm vanishes.
double relative_percentage_error(const VectorField& num, const VectorField& exact);

/// ||div_P V|| in the uniform-weight l2 norm.
double divergence_error(const OperatorSet& ops, const VectorField& v);

}  // namespace sbpsat
