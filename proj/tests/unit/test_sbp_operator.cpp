#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sbpsat/sbp_operator.hpp"
#include "support/dense_oracle.hpp"
#include "support/test_utils.hpp"

using namespace sbpsat;
namespace oracle = sbpsat::testing;

namespace {

// Q + Q^T must be diag(-1, 0, ..., 0, 1) entry-wise.
void check_q_structure(const SbpOperator1D& op, double tol) {
  const oracle::DenseMatrix q = oracle::dense_q(op);
  for (int i = 0; i < op.nodes; ++i) {
    for (int j = 0; j < op.nodes; ++j) {
      double expected = 0.0;
      if (i == j && i == 0) expected = -1.0;
      if (i == j && i == op.nodes - 1) expected = 1.0;
      CHECK(std::abs(q.at(i, j) + q.at(j, i) - expected) <= tol);
    }
  }
}

std::vector<double> sample_poly(const SbpOperator1D& op, int degree) {
  std::vector<double> w(static_cast<std::size_t>(op.nodes));
  for (int i = 0; i < op.nodes; ++i)
    w[static_cast<std::size_t>(i)] = std::pow(op.spacing * i, degree);
  return w;
}

std::vector<double> sample_poly_deriv(const SbpOperator1D& op, int degree) {
  std::vector<double> w(static_cast<std::size_t>(op.nodes));
  for (int i = 0; i < op.nodes; ++i)
    w[static_cast<std::size_t>(i)] = degree * std::pow(op.spacing * i, degree - 1);
  return w;
}

}  // namespace

TEST_CASE("build_sbp2 rejects invalid arguments") {
  CHECK_THROWS_AS(build_sbp2(2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(build_sbp2(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_sbp2(5, -1.0), std::invalid_argument);
}

TEST_CASE("build_sbp4 rejects too few nodes") {
  CHECK_THROWS_AS(build_sbp4(8, 0.1), std::invalid_argument);
  CHECK_NOTHROW(build_sbp4(9, 0.1));
}

TEST_CASE("sbp2 norm and closure values") {
  const SbpOperator1D op = build_sbp2(5, 0.25);
  CHECK(op.p_weights.front() == 0.5);
  CHECK(op.p_weights.back() == 0.5);
  CHECK(op.p_weights[2] == 1.0);
  CHECK(op.p_corner == 0.5);

  // Derivative of x is exactly 1 everywhere.
  std::vector<double> w{0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<double> d = apply_derivative(op, w);
  for (double v : d) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sbp2 inner product on the appendix norm") {
  const SbpOperator1D op = build_sbp2(3, 0.5);
  const std::vector<double> w{1.0, 1.0, 1.0};
  CHECK(inner_product_1d(op, w, w) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("q structure for both operators") {
  check_q_structure(build_sbp2(5, 0.25), 1e-13);
  check_q_structure(build_sbp2(11, 0.1), 1e-13);
  check_q_structure(build_sbp4(9, 0.125), 1e-13);
  check_q_structure(build_sbp4(14, 0.04), 1e-13);
}

TEST_CASE("sbp4 exact on quadratics everywhere") {
  const SbpOperator1D op = build_sbp4(17, 1.0 / 16.0);
  const std::vector<double> d = apply_derivative(op, sample_poly(op, 2));
  const std::vector<double> exact = sample_poly_deriv(op, 2);
  for (int i = 0; i < op.nodes; ++i)
    CHECK(std::abs(d[static_cast<std::size_t>(i)] - exact[static_cast<std::size_t>(i)]) <= 1e-12);
}

TEST_CASE("sbp4 on x^4: interior exact, closure rows truncated") {
  const SbpOperator1D op = build_sbp4(17, 1.0 / 16.0);
  const std::vector<double> d = apply_derivative(op, sample_poly(op, 4));
  const std::vector<double> exact = sample_poly_deriv(op, 4);
  double boundary_err = 0.0;
  for (int i = 0; i < op.nodes; ++i) {
    const double err = std::abs(d[static_cast<std::size_t>(i)] - exact[static_cast<std::size_t>(i)]);
    if (i >= op.boundary_width && i < op.nodes - op.boundary_width)
      CHECK(err <= 1e-11);
    else
      boundary_err = std::max(boundary_err, err);
  }
  CHECK(boundary_err > 1e-10);  // second-order closure is not exact on quartics
  CHECK(boundary_err < 1e-1);
}

TEST_CASE("sbp2 polynomial exactness orders") {
  const SbpOperator1D op = build_sbp2(12, 0.07);
  const std::vector<double> d1 = apply_derivative(op, sample_poly(op, 1));
  const std::vector<double> e1 = sample_poly_deriv(op, 1);
  for (std::size_t i = 0; i < d1.size(); ++i) CHECK(std::abs(d1[i] - e1[i]) <= 1e-13);

  const std::vector<double> d2 = apply_derivative(op, sample_poly(op, 2));
  const std::vector<double> e2 = sample_poly_deriv(op, 2);
  for (int i = op.boundary_width; i < op.nodes - op.boundary_width; ++i)
    CHECK(std::abs(d2[static_cast<std::size_t>(i)] - e2[static_cast<std::size_t>(i)]) <= 1e-12);
}

TEST_CASE("apply_derivative matches the appendix matrix on n=4") {
  const SbpOperator1D op = build_sbp2(4, 1.0);
  const std::vector<double> w{0.0, 1.0, 4.0, 9.0};
  const std::vector<double> d = apply_derivative(op, w);
  // Oracle: dense multiply with the printed 4x4 matrix.
  oracle::DenseMatrix m(4, 4);
  m.at(0, 0) = -1.0; m.at(0, 1) = 1.0;
  m.at(1, 0) = -0.5; m.at(1, 2) = 0.5;
  m.at(2, 1) = -0.5; m.at(2, 3) = 0.5;
  m.at(3, 2) = -1.0; m.at(3, 3) = 1.0;
  const std::vector<double> expected = oracle::matvec(m, w);
  CHECK(expected == std::vector<double>{1.0, 2.0, 4.0, 5.0});
  for (std::size_t i = 0; i < 4; ++i) CHECK(d[i] == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("apply_derivative equals dense reconstruction on random input") {
  std::mt19937 gen(31);
  for (const SbpOperator1D& op : {build_sbp2(11, 0.3), build_sbp4(13, 0.11)}) {
    const std::vector<double> w = oracle::random_vector(static_cast<std::size_t>(op.nodes), gen);
    const std::vector<double> d = apply_derivative(op, w);
    const std::vector<double> ref = oracle::matvec(oracle::dense_derivative(op), w);
    const double scale = oracle::max_abs(ref) + 1.0;
    CHECK(oracle::max_abs_diff(d, ref) <= 1e-13 * scale);
  }
}

TEST_CASE("apply_derivative of a constant vanishes") {
  for (const SbpOperator1D& op : {build_sbp2(9, 0.4), build_sbp4(12, 0.05)}) {
    const std::vector<double> w(static_cast<std::size_t>(op.nodes), 3.7);
    for (double v : apply_derivative(op, w)) CHECK(std::abs(v) <= 1e-14 / op.spacing);
  }
}

TEST_CASE("apply_derivative and inner_product_1d reject length mismatch") {
  const SbpOperator1D op = build_sbp2(5, 0.2);
  const std::vector<double> w(4, 1.0);
  CHECK_THROWS_AS(apply_derivative(op, w), std::invalid_argument);
  const std::vector<double> v(5, 1.0);
  CHECK_THROWS_AS(inner_product_1d(op, v, w), std::invalid_argument);
}

TEST_CASE("inner product is positive definite and symmetric") {
  std::mt19937 gen(7);
  const SbpOperator1D op = build_sbp4(10, 1.0 / 9.0);
  const std::vector<double> zero(10, 0.0);
  CHECK(inner_product_1d(op, zero, zero) == 0.0);

  const std::vector<double> v = oracle::random_vector(10, gen);
  const std::vector<double> w = oracle::random_vector(10, gen);
  CHECK(inner_product_1d(op, v, v) > 0.0);
  CHECK(inner_product_1d(op, v, w) == doctest::Approx(inner_product_1d(op, w, v)).epsilon(1e-15));

  // Unit weights sum to the domain length.
  const std::vector<double> ones(10, 1.0);
  CHECK(inner_product_1d(op, ones, ones) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("1d summation-by-parts identity") {
  std::mt19937 gen(99);
  for (const SbpOperator1D& op : {build_sbp2(10, 0.17), build_sbp4(11, 0.09)}) {
    for (int rep = 0; rep < 20; ++rep) {
      const std::vector<double> v = oracle::random_vector(static_cast<std::size_t>(op.nodes), gen);
      const std::vector<double> w = oracle::random_vector(static_cast<std::size_t>(op.nodes), gen);
      const double lhs = inner_product_1d(op, v, apply_derivative(op, w)) +
                         inner_product_1d(op, apply_derivative(op, v), w);
      const double rhs = v.back() * w.back() - v.front() * w.front();
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(rhs) + 1.0));
    }
  }
}

TEST_CASE("norm equivalence with the trapezoid-like weights") {
  std::mt19937 gen(5);
  for (const SbpOperator1D& op : {build_sbp2(14, 0.03), build_sbp4(14, 0.03)}) {
    const std::vector<double> w = oracle::random_vector(static_cast<std::size_t>(op.nodes), gen);
    double plain = 0.0;
    for (double x : w) plain += x * x;
    plain *= op.spacing;
    double pmin = op.p_weights[0], pmax = op.p_weights[0];
    for (double p : op.p_weights) {
      pmin = std::min(pmin, p);
      pmax = std::max(pmax, p);
    }
    const double pnorm = inner_product_1d(op, w, w);
    CHECK(pnorm >= pmin * plain * (1.0 - 1e-14));
    CHECK(pnorm <= pmax * plain * (1.0 + 1e-14));
  }
}

TEST_CASE("bottom closure mirrors the top closure") {
  for (const SbpOperator1D& op : {build_sbp2(8, 0.1), build_sbp4(12, 0.1)}) {
    const oracle::DenseMatrix d = oracle::dense_derivative(op);
    for (int i = 0; i < op.nodes; ++i)
      for (int j = 0; j < op.nodes; ++j)
        CHECK(d.at(i, j) == doctest::Approx(-d.at(op.nodes - 1 - i, op.nodes - 1 - j)).epsilon(1e-15));
  }
}
