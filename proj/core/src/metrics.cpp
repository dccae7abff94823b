#include "sbpsat/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace sbpsat {

namespace {

double node_weight(const GridSpec& grid) {
  double w = 1.0;
  for (int a = 0; a < grid.dim(); ++a) w *= grid.axis(a).spacing;
  return w;
}

}  // namespace

double l2_norm_uniform(const ScalarField& w) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * w[i];
  return std::sqrt(node_weight(w.grid) * acc);
}

double l2_norm_uniform(const VectorField& w) {
  double acc = 0.0;
  for (int c = 0; c < w.dim(); ++c) {
    const ScalarField& f = w[c];
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * f[i];
  }
  return std::sqrt(node_weight(w.grid()) * acc);
}

double relative_percentage_error(const VectorField& num, const VectorField& exact) {
  if (num.dim() != exact.dim() || !(num.grid() == exact.grid()))
    throw std::invalid_argument("relative_percentage_error: grid mismatch");
  double diff = 0.0, ref = 0.0;
  for (int c = 0; c < num.dim(); ++c) {
    for (std::size_t i = 0; i < num[c].size(); ++i) {
      const double d = num[c][i] - exact[c][i];
      diff += d * d;
      ref += exact[c][i] * exact[c][i];
    }
  }
  if (ref == 0.0)
    throw std::invalid_argument("relative_percentage_error: reference field is zero");
  return std::sqrt(diff / ref) * 100.0;
}

double divergence_error(const OperatorSet& ops, const VectorField& v) {
  return l2_norm_uniform(div_P(ops, v));
}

}  // namespace sbpsat
