#include "grouplie/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "grouplie/error.hpp"

namespace grouplie {

namespace {

// |J_m(w)| <= (|w|/2)^m / m! * exp(|w|^2 / 4)
double log_tail_bound(int m, double absw) {
  return m * std::log(absw / 2.0) - std::lgamma(m + 1.0) + absw * absw / 4.0;
}

}  // namespace

BesselValue bessel_j(int m, Complex w, int terms) {
  if (terms < 1) throw Error(ErrorCode::BadParameters, "terms must be >= 1");
  const int am = std::abs(m);
  const Complex half = w / 2.0;
  const Complex half_sq = half * half;
  // first term (w/2)^|m| / |m|!
  Complex term = 1.0;
  for (int i = 1; i <= am; ++i) term *= half / static_cast<double>(i);
  Complex sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= -half_sq / (static_cast<double>(k + 1) * static_cast<double>(k + 1 + am));
  }
  BesselValue out;
  out.value = (m < 0 && am % 2 == 1) ? -sum : sum;
  if (std::abs(w) == 0.0) {
    out.tail_bound = 0.0;
  } else {
    // term now holds the first omitted term
    const double t = std::abs(term);
    const double q = std::norm(half) / (static_cast<double>(terms + 1) * static_cast<double>(terms + 1 + am));
    out.tail_bound = q < 1.0 ? t / (1.0 - q) : std::numeric_limits<double>::infinity();
  }
  return out;
}

int default_truncation(int N, Complex z) {
  return std::max(N, static_cast<int>(std::ceil(4.0 * std::abs(z))) + 30);
}

BesselExpansion exp_cyclic(int N, Complex omega, Complex z, int truncation, double tol, bool negate_phi) {
  if (N < 2) throw Error(ErrorCode::BadParameters, "N must be >= 2");
  if (std::abs(std::abs(omega) - 1.0) > 1e-12) throw Error(ErrorCode::BadParameters, "|omega| must be 1");
  if (truncation < N) throw Error(ErrorCode::BadParameters, "truncation must be >= N");

  BesselExpansion e;
  e.N = N;
  e.omega = omega;
  e.phi = std::sqrt(omega);
  if (negate_phi) e.phi = -e.phi;
  e.z = z;
  e.truncation = truncation;
  e.coefficients.assign(static_cast<std::size_t>(N), Complex(0.0));

  const Complex w = z * e.phi;
  const double absw = std::abs(w);
  // enough series terms for the largest order: the ratio test converges once k^2 >> |w|^2/4
  const int terms = static_cast<int>(std::ceil(absw)) + 40;
  double bound = 0.0;
  for (int m = -truncation; m <= truncation; ++m) {
    const BesselValue j = bessel_j(m, w, terms);
    const Complex phi_pow = std::pow(e.phi, -m);
    const int r = ((m % N) + N) % N;
    e.coefficients[static_cast<std::size_t>(r)] += j.value * phi_pow;
    bound += j.tail_bound;
  }
  // omitted orders |m| > M on both sides, |phi| = 1; consecutive bounds shrink by (|w|/2)/(m+1)
  if (absw > 0.0) {
    const double ratio = absw / 2.0 / (truncation + 2);
    if (ratio >= 1.0) throw Error(ErrorCode::TruncationInsufficient, "truncation below |z phi| / 2");
    bound += 2.0 * std::exp(log_tail_bound(truncation + 1, absw)) / (1.0 - ratio);
  }
  e.error_bound = bound;
  if (!(bound <= tol)) {
    throw Error(ErrorCode::TruncationInsufficient, "error bound " + std::to_string(bound) + " exceeds tolerance " +
                                                       std::to_string(tol) + " at M = " + std::to_string(truncation));
  }
  return e;
}

std::vector<Complex> exp_matrix_oracle(int N, Complex omega, Complex z) {
  if (N < 2) throw Error(ErrorCode::BadParameters, "N must be >= 2");
  // y acts on the character basis with eigenvalue lambda_j = zeta^j; the first column of
  // exp(A) is the inverse DFT of exp(eigenvalues).
  std::vector<Complex> eig(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    const Complex lambda = std::polar(1.0, 2.0 * std::numbers::pi * j / N);
    eig[static_cast<std::size_t>(j)] = std::exp(z / 2.0 * (lambda - omega / lambda));
  }
  std::vector<Complex> out(static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r) {
    Complex acc = 0.0;
    for (int j = 0; j < N; ++j) acc += eig[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * j * r / N);
    out[static_cast<std::size_t>(r)] = acc / static_cast<double>(N);
  }
  return out;
}

std::vector<Complex> cyclic_convolve(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "cyclic convolution of different lengths");
  const std::size_t n = a.size();
  std::vector<Complex> out(n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
  }
  return out;
}

double max_deviation(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vectors of different lengths");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace grouplie
