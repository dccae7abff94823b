#pragma once

#include <random>

#include "sbpsat/grid.hpp"

namespace sbpsat::testing {

inline std::vector<double> random_vector(std::size_t n, std::mt19937& gen) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

inline ScalarField random_field(const GridSpec& grid, std::mt19937& gen) {
  ScalarField f(grid);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& x : f.values) x = dist(gen);
  return f;
}

inline VectorField random_vector_field(const GridSpec& grid, std::mt19937& gen) {
  VectorField f(grid);
  for (int c = 0; c < f.dim(); ++c) f[c] = random_field(grid, gen);
  return f;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace sbpsat::testing
