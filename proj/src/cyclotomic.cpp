#include "grouplie/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "grouplie/error.hpp"

namespace grouplie {

namespace {

using IntPoly = std::vector<std::int64_t>;

std::int64_t checked_mul_sub(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_sub_overflow(acc, prod, &out)) {
    throw Error(ErrorCode::BadParameters, "cyclotomic polynomial coefficient overflow");
  }
  return out;
}

// Exact quotient of num by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t q = num[i];
    quot[i - dn] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = checked_mul_sub(num[i - dn + j], q, den[j]);
  }
  return quot;
}

IntPoly cyclotomic_poly(int m, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(std::move(p), cyclotomic_poly(d, memo));
  }
  memo.emplace(m, p);
  return p;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<int, std::unique_ptr<CyclotomicField>>& registry() {
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  return fields;
}

}  // namespace

CyclotomicField::CyclotomicField(int conductor) : m_(conductor) {
  std::map<int, IntPoly> memo;
  poly_ = cyclotomic_poly(m_, memo);
  phi_ = static_cast<int>(poly_.size()) - 1;

  const int limit = std::max(m_, 2 * phi_ - 1);
  const auto phi = static_cast<std::size_t>(phi_);
  IntPoly cur(phi, 0);
  cur[0] = 1;
  powers_.reserve(static_cast<std::size_t>(limit));
  for (int k = 0; k < limit; ++k) {
    powers_.push_back(cur);
    // multiply by x and fold the overflow term through Phi_m
    const std::int64_t lead = cur[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (lead != 0) {
      for (std::size_t j = 0; j < phi; ++j) cur[j] = checked_mul_sub(cur[j], lead, poly_[j]);
    }
  }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 1) throw Error(ErrorCode::BadParameters, "conductor must be positive");
  std::lock_guard lock(registry_mutex());
  auto& fields = registry();
  auto it = fields.find(conductor);
  if (it == fields.end()) {
    it = fields.emplace(conductor, std::unique_ptr<CyclotomicField>(new CyclotomicField(conductor))).first;
  }
  return *it->second;
}

CycloScalar::CycloScalar(int conductor)
    : field_(&CyclotomicField::get(conductor)),
      c_(static_cast<std::size_t>(field_->degree())) {}

CycloScalar::CycloScalar(int conductor, const Rational& value) : CycloScalar(conductor) {
  c_[0] = value;
}

CycloScalar::CycloScalar(int conductor, std::vector<Rational> coeffs)
    : field_(&CyclotomicField::get(conductor)) {
  reduce_from(std::move(coeffs));
}

CycloScalar CycloScalar::root_of_unity(int conductor, long k) {
  CycloScalar r(conductor);
  long e = k % conductor;
  if (e < 0) e += conductor;
  const auto& pw = r.field_->power(static_cast<int>(e));
  for (std::size_t i = 0; i < pw.size(); ++i) r.c_[i] = Rational(static_cast<long>(pw[i]));
  return r;
}

void CycloScalar::reduce_from(std::vector<Rational>&& raw) {
  const auto phi = static_cast<std::size_t>(field_->degree());
  c_.assign(phi, Rational(0));
  const int m = field_->conductor();
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (sgn(raw[k]) == 0) continue;
    if (k < phi) {
      c_[k] += raw[k];
      continue;
    }
    int e = static_cast<int>(k);
    if (e >= field_->reduction_limit()) e %= m;
    const auto& pw = field_->power(e);
    for (std::size_t j = 0; j < phi; ++j) {
      if (pw[j] != 0) c_[j] += raw[k] * static_cast<long>(pw[j]);
    }
  }
}

void CycloScalar::check_same(const CycloScalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::ConductorMismatch, "conductors " + std::to_string(conductor()) + " and " +
                                                  std::to_string(other.conductor()));
  }
}

std::vector<Rational> CycloScalar::padded_coeffs() const {
  std::vector<Rational> out(static_cast<std::size_t>(conductor()), Rational(0));
  std::copy(c_.begin(), c_.end(), out.begin());
  return out;
}

bool CycloScalar::is_zero() const {
  for (const auto& q : c_) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

bool CycloScalar::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

std::optional<Rational> CycloScalar::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return std::nullopt;
  }
  return c_[0];
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& other) {
  check_same(other);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(other.c_[i]) != 0) c_[i] += other.c_[i];
  }
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& other) {
  check_same(other);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(other.c_[i]) != 0) c_[i] -= other.c_[i];
  }
  return *this;
}

CycloScalar& CycloScalar::operator*=(const Rational& scale) {
  if (sgn(scale) == 0) {
    for (auto& q : c_) q = 0;
    return *this;
  }
  for (auto& q : c_) {
    if (sgn(q) != 0) q *= scale;
  }
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& other) {
  check_same(other);
  if (auto r = other.as_rational()) return *this *= *r;
  if (auto r = as_rational()) {
    const Rational s = *r;
    *this = other;
    return *this *= s;
  }
  const std::size_t n = c_.size();
  std::vector<Rational> raw(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(other.c_[j]) != 0) raw[i + j] += c_[i] * other.c_[j];
    }
  }
  reduce_from(std::move(raw));
  return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& other) {
  return *this *= other.inverse();
}

CycloScalar CycloScalar::conj() const {
  const int m = conductor();
  std::vector<Rational> raw(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    raw[static_cast<std::size_t>((m - static_cast<int>(i)) % m)] += c_[i];
  }
  return CycloScalar(m, std::move(raw));
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto r = as_rational()) return CycloScalar(conductor(), 1 / *r);

  // Solve (multiplication-by-this) * x = e_0 over Q; column j is this * zeta^j.
  const std::size_t n = c_.size();
  const int m = conductor();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    CycloScalar col = *this * root_of_unity(m, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = col.c_[i];
  }
  aug[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(aug[piv][col]) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::DivisionByZero, "singular multiplication matrix");
    std::swap(aug[piv], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (std::size_t k = col; k <= n; ++k) aug[col][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(aug[r][col]) == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t k = col; k <= n; ++k) {
        if (sgn(aug[col][k]) != 0) aug[r][k] -= f * aug[col][k];
      }
    }
  }
  CycloScalar out(m);
  for (std::size_t i = 0; i < n; ++i) out.c_[i] = aug[i][n];
  return out;
}

CycloScalar CycloScalar::embed(int target_conductor) const {
  const int m = conductor();
  if (target_conductor % m != 0) {
    throw Error(ErrorCode::ConductorMismatch,
                std::to_string(m) + " does not divide " + std::to_string(target_conductor));
  }
  if (target_conductor == m) return *this;
  const std::size_t step = static_cast<std::size_t>(target_conductor / m);
  std::vector<Rational> raw(static_cast<std::size_t>(target_conductor), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  return CycloScalar(target_conductor, std::move(raw));
}

std::complex<double> CycloScalar::to_complex() const {
  return grouplie::to_complex(*this, 9).value;
}

std::string CycloScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const bool neg = sgn(c_[i]) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    const Rational mag = abs(c_[i]);
    if (i == 0) {
      os << rational_to_string(mag);
    } else {
      if (mag != 1) os << rational_to_string(mag) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

CycloScalar cyclo_arith(const CycloScalar& a, const CycloScalar& b, CycloOp op) {
  switch (op) {
    case CycloOp::Add: return a + b;
    case CycloOp::Mul: return a * b;
    case CycloOp::Conj: return a.conj();
    case CycloOp::Neg: return -a;
    case CycloOp::Inv: return a.inverse();
  }
  throw Error(ErrorCode::BadParameters, "unknown op");
}

ComplexApprox to_complex(const CycloScalar& a, int digits) {
  if (digits > 15) throw Error(ErrorCode::BadParameters, "at most 15 digits are supported");
  const int m = a.conductor();
  constexpr long double kEps = 1.0842021724855044340e-19L;  // 2^-63
  long double re = 0;
  long double im = 0;
  long double mag_sum = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const long double q = c[i].get_d();
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(i) / m;
    re += q * std::cos(angle);
    im += q * std::sin(angle);
    mag_sum += std::fabs(q);
  }
  // get_d truncates to double (rel. 2^-52); trig and accumulation stay in long double.
  const double accum = static_cast<double>(mag_sum * (0x1p-52L + (c.size() + 4) * 4 * kEps));
  const std::complex<double> value(static_cast<double>(re), static_cast<double>(im));
  const double bound = accum + std::abs(value) * 0x1p-52;
  if (!(bound < std::pow(10.0, -digits))) {
    throw Error(ErrorCode::BadParameters, "cannot certify " + std::to_string(digits) + " digits for " + a.to_string());
  }
  return {value, bound};
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
    throw Error(ErrorCode::InputError, "not a rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace grouplie
