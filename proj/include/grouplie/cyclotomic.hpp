#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grouplie {

using Rational = mpq_class;

/// Q(zeta_m) realized as Q[x]/(Phi_m). Instances are interned per conductor and live
/// for the whole process, so raw pointers to them stay valid.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int conductor);

  int conductor() const { return m_; }
  /// phi(m), the dimension over Q.
  int degree() const { return phi_; }
  /// Coefficients of Phi_m, lowest degree first (monic, length phi+1).
  const std::vector<std::int64_t>& cyclotomic_polynomial() const { return poly_; }
  /// Canonical coefficients of x^k for 0 <= k < reduction_limit().
  const std::vector<std::int64_t>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }
  int reduction_limit() const { return static_cast<int>(powers_.size()); }

 private:
  explicit CyclotomicField(int conductor);

  int m_;
  int phi_;
  std::vector<std::int64_t> poly_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Exact element of Q(zeta_m) in canonical form: coefficients of 1, zeta, ..., zeta^{phi-1}
/// after reduction modulo Phi_m.
class CycloScalar {
 public:
  explicit CycloScalar(int conductor);
  CycloScalar(int conductor, const Rational& value);
  CycloScalar(int conductor, std::vector<Rational> coeffs);  // any length; reduced

  static CycloScalar zero(int conductor) { return CycloScalar(conductor); }
  static CycloScalar one(int conductor) { return CycloScalar(conductor, Rational(1)); }
  /// zeta_m^k, k taken modulo m.
  static CycloScalar root_of_unity(int conductor, long k);

  int conductor() const { return field_->conductor(); }
  const CyclotomicField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Canonical coefficients zero-padded to length m.
  std::vector<Rational> padded_coeffs() const;

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& other);
  CycloScalar& operator-=(const CycloScalar& other);
  CycloScalar& operator*=(const CycloScalar& other);
  CycloScalar& operator*=(const Rational& scale);
  CycloScalar& operator/=(const CycloScalar& other);

  /// Complex conjugation, the ring map zeta -> zeta^{m-1}.
  CycloScalar conj() const;
  CycloScalar inverse() const;
  /// Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^{M/m}; requires m | M.
  CycloScalar embed(int target_conductor) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

 private:
  void check_same(const CycloScalar& other) const;
  void reduce_from(std::vector<Rational>&& raw);

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

inline CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
inline CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
inline CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
inline CycloScalar operator*(CycloScalar a, const Rational& b) { return a *= b; }
inline CycloScalar operator*(const Rational& b, CycloScalar a) { return a *= b; }
inline CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }

enum class CycloOp { Add, Mul, Conj, Neg, Inv };

/// Dispatching form of the field operations; the unary ops ignore b.
CycloScalar cyclo_arith(const CycloScalar& a, const CycloScalar& b, CycloOp op);

/// Evaluation at zeta = exp(2 pi i / m) with an a-priori bound on the rounding error.
struct ComplexApprox {
  std::complex<double> value;
  double error_bound;
};

/// Evaluates with long double accumulation and tracks a rigorous error bound. Throws
/// BadParameters when the bound cannot be brought below 10^-digits (digits > 15, or
/// coefficients too large for double output).
ComplexApprox to_complex(const CycloScalar& a, int digits);

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace grouplie
