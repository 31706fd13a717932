#pragma once

#include <complex>
#include <vector>

namespace grouplie {

using Complex = std::complex<double>;

struct BesselValue {
  Complex value;
  /// Upper bound on |J_m(w) - value| from the omitted terms.
  double tail_bound = 0.0;
};

/// Partial sum of sum_k (-1)^k (w/2)^{2k+|m|} / (k! (k+|m|)!) with `terms` terms; J_{-m} = (-1)^m J_m.
BesselValue bessel_j(int m, Complex w, int terms);

struct BesselExpansion {
  int N = 0;
  Complex omega;
  Complex phi;
  Complex z;
  /// coefficients[r] is the coefficient of y^r in exp((z/2)(y - omega y^-1)).
  std::vector<Complex> coefficients;
  int truncation = 0;
  double error_bound = 0.0;
};

/// max(N, ceil(4|z phi|) + 30)
int default_truncation(int N, Complex z);

/// Folded series coefficients[r] = sum_{|m| <= M, m = r mod N} J_m(z phi) phi^-m with phi^2 = omega.
/// Throws TruncationInsufficient when the error bound exceeds tol; BadParameters on bad input.
BesselExpansion exp_cyclic(int N, Complex omega, Complex z, int truncation, double tol = 1e-9,
                           bool negate_phi = false);

/// First column of exp of the regular-representation matrix of (z/2)(y - omega y^-1), computed by
/// diagonalizing over the characters of Z/N.
std::vector<Complex> exp_matrix_oracle(int N, Complex omega, Complex z);

/// Convolution in C[Z/N].
std::vector<Complex> cyclic_convolve(const std::vector<Complex>& a, const std::vector<Complex>& b);

double max_deviation(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace grouplie
