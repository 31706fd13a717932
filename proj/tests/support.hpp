#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "grouplie/cyclotomic.hpp"
#include "grouplie/linalg.hpp"

namespace testing {

using grouplie::CycloScalar;
using grouplie::Rational;

inline CycloScalar random_scalar(std::mt19937& rng, int m, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(static_cast<std::size_t>(m));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return CycloScalar(m, std::move(c));
}

// entries in {0, ±1, ±zeta}
inline CycloScalar small_entry(std::mt19937& rng, int m) {
  const int pick = std::uniform_int_distribution<int>(0, 4)(rng);
  switch (pick) {
    case 0: return CycloScalar(m);
    case 1: return CycloScalar::one(m);
    case 2: return -CycloScalar::one(m);
    case 3: return CycloScalar::root_of_unity(m, 1);
    default: return -CycloScalar::root_of_unity(m, 1);
  }
}

inline Eigen::MatrixXcd to_eigen(const grouplie::CycloMatrix& a) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_complex();
    }
  }
  return out;
}

// singular values above 1e-8
inline std::size_t numeric_rank(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-8) ++r;
  }
  return r;
}

}  // namespace testing
