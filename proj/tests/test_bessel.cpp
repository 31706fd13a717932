#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "grouplie/bessel.hpp"
#include "grouplie/error.hpp"

using namespace grouplie;

namespace {

// first column of expm of the regular-representation matrix, via Eigen's Pade scaling and squaring
std::vector<Complex> pade_oracle(int n, Complex omega, Complex z) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    a((r + 1) % n, r) += z / 2.0;
    a((r - 1 + n) % n, r) -= z / 2.0 * omega;
  }
  const Eigen::MatrixXcd e = a.exp();
  std::vector<Complex> out;
  for (int r = 0; r < n; ++r) out.push_back(e(r, 0));
  return out;
}

Complex root(int k, int n) { return std::polar(1.0, 2.0 * std::numbers::pi * k / n); }

}  // namespace

TEST_CASE("bessel series") {
  CHECK(std::abs(bessel_j(0, 0.0, 5).value - 1.0) == 0.0);
  for (int m = -4; m <= 4; ++m)
    if (m != 0) CHECK(std::abs(bessel_j(m, 0.0, 5).value) == 0.0);
  // real arguments against the standard library
  for (double x : {0.1, 0.5, 1.0, 2.5, 4.0}) {
    for (int m = 0; m <= 6; ++m) {
      const auto j = bessel_j(m, x, 40);
      CHECK(std::abs(j.value - std::cyl_bessel_j(static_cast<double>(m), x)) < 1e-13);
      CHECK(j.tail_bound < 1e-15);
    }
  }
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    const Complex w(u(rng), u(rng));
    for (int m = -5; m <= 5; ++m) {
      const double sign = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(bessel_j(m, -w, 40).value - sign * bessel_j(m, w, 40).value) < 1e-12);
    }
  }
  double s = 0.0;
  for (int m = -40; m <= 40; ++m) s += std::norm(bessel_j(m, 1.0, 40).value);
  CHECK(std::abs(s - 1.0) < 1e-12);
  CHECK_THROWS_AS(bessel_j(0, 1.0, 0), Error);
  // tail bound is honest when the series is cut short
  const auto short_sum = bessel_j(1, 3.0, 3);
  CHECK(std::abs(short_sum.value - std::cyl_bessel_j(1.0, 3.0)) <= short_sum.tail_bound);
}

TEST_CASE("folded coefficients") {
  auto e = exp_cyclic(5, 1.0, 0.0, default_truncation(5, 0.0));
  CHECK(e.coefficients[0] == Complex(1.0, 0.0));
  for (int r = 1; r < 5; ++r) CHECK(e.coefficients[static_cast<std::size_t>(r)] == Complex(0.0, 0.0));

  // y - y^-1 vanishes in Z/2
  e = exp_cyclic(2, 1.0, 1.3, default_truncation(2, 1.3));
  CHECK(std::abs(e.coefficients[0] - 1.0) < 1e-12);
  CHECK(std::abs(e.coefficients[1]) < 1e-12);

  e = exp_cyclic(4, 1.0, 1.0, default_truncation(4, 1.0));
  CHECK(max_deviation(e.coefficients, pade_oracle(4, 1.0, 1.0)) < 1e-10);

  const Complex z(0.7, 0.3);
  e = exp_cyclic(6, root(1, 6), z, default_truncation(6, z));
  CHECK(max_deviation(e.coefficients, exp_matrix_oracle(6, root(1, 6), z)) < 1e-9);
  CHECK(e.error_bound < 1e-9);
}

TEST_CASE("DFT oracle against Pade") {
  for (int n = 2; n <= 12; ++n)
    for (int k = 0; k < 2 * n; ++k)
      for (Complex z : {Complex(0.0), Complex(1.0), Complex(0.7, 0.3), Complex(0.0, 2.0)})
        CHECK(max_deviation(exp_matrix_oracle(n, root(k, 2 * n), z), pade_oracle(n, root(k, 2 * n), z)) < 1e-10);
  const auto three = exp_matrix_oracle(3, 1.0, 1.0);
  // eigenvalues (1/2)(lambda - lambda^2) at cube roots
  Complex c0 = 0.0;
  for (int j = 0; j < 3; ++j) c0 += std::exp(0.5 * (root(j, 3) - root(2 * j, 3)));
  CHECK(std::abs(three[0] - c0 / 3.0) < 1e-14);
}

TEST_CASE("phi sign, group law and truncation errors") {
  const Complex z1(0.4, -0.2), z2(-0.3, 0.5);
  for (int n = 2; n <= 8; ++n) {
    const Complex omega = root(1, 2 * n);
    const auto a = exp_cyclic(n, omega, z1, default_truncation(n, z1));
    const auto b = exp_cyclic(n, omega, z1, default_truncation(n, z1), 1e-9, true);
    CHECK(max_deviation(a.coefficients, b.coefficients) < 1e-12);
    const auto c = exp_cyclic(n, omega, z2, default_truncation(n, z2));
    const auto d = exp_cyclic(n, omega, z1 + z2, default_truncation(n, z1 + z2));
    CHECK(max_deviation(cyclic_convolve(a.coefficients, c.coefficients), d.coefficients) < 1e-9);
  }
  CHECK_THROWS_AS(exp_cyclic(1, 1.0, 1.0, 10), Error);
  CHECK_THROWS_AS(exp_cyclic(4, 2.0, 1.0, 10), Error);
  CHECK_THROWS_AS(exp_cyclic(4, 1.0, 1.0, 2), Error);
  try {
    exp_cyclic(4, 1.0, Complex(8.0, 0.0), 4, 1e-9);
    FAIL("expected TruncationInsufficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationInsufficient);
  }
}
