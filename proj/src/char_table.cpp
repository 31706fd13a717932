#include "grouplie/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include "grouplie/error.hpp"

namespace grouplie {

ClassConstants::ClassConstants(const GroupTable& g, const ConjugacyData& cd)
    : r_(cd.count()), a_(r_ * r_ * r_, 0) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element z = g.mul(static_cast<Element>(x), static_cast<Element>(y));
      const auto k = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(z)]);
      if (cd.representative(static_cast<int>(k)) != z) continue;
      const auto i = static_cast<std::size_t>(cd.class_of[x]);
      const auto j = static_cast<std::size_t>(cd.class_of[y]);
      ++a_[(i * r_ + j) * r_ + k];
    }
  }
}

ClassConstants class_constants(const GroupTable& g, const ConjugacyData& cd) { return ClassConstants(g, cd); }

namespace {

using u64 = std::uint64_t;
using ModVec = std::vector<u64>;
using ModMat = std::vector<ModVec>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from_signed(long long v) const {
    const long long m = static_cast<long long>(p);
    return static_cast<u64>(((v % m) + m) % m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> factors;
  u64 t = f.p - 1;
  for (u64 d = 2; d * d <= t; ++d) {
    if (t % d == 0) {
      factors.push_back(d);
      while (t % d == 0) t /= d;
    }
  }
  if (t > 1) factors.push_back(t);
  for (u64 g = 2; g < f.p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](u64 q) { return f.pow(g, (f.p - 1) / q) != 1; })) return g;
  }
  return 1;  // p == 2
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(ModMat& rows, const Fp& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const u64 fac = rows[o][c];
      for (std::size_t k = 0; k < cols; ++k) rows[o][k] = f.sub(rows[o][k], f.mul(fac, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : m x = 0} for a square matrix.
ModMat nullspace(ModMat m, const Fp& f) {
  const std::size_t n = m.size();
  auto pivots = rref(m, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction, lowest degree first.
std::vector<u64> charpoly(ModMat h, const Fp& f) {
  const std::size_t n = h.size();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t i = k + 1;
    while (i < n && h[i][k] == 0) ++i;
    if (i == n) continue;
    if (i != k + 1) {
      std::swap(h[i], h[k + 1]);
      for (auto& row : h) std::swap(row[i], row[k + 1]);
    }
    const u64 inv = f.inv(h[k + 1][k]);
    for (std::size_t j = k + 2; j < n; ++j) {
      if (h[j][k] == 0) continue;
      const u64 fac = f.mul(h[j][k], inv);
      for (std::size_t c = 0; c < n; ++c) h[j][c] = f.sub(h[j][c], f.mul(fac, h[k + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][k + 1] = f.add(h[r][k + 1], f.mul(fac, h[r][j]));
    }
  }
  std::vector<std::vector<u64>> polys{{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<u64> pm(m + 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pm[d + 1] = f.add(pm[d + 1], prev[d]);
      pm[d] = f.sub(pm[d], f.mul(h[m - 1][m - 1], prev[d]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 coef = f.mul(t, h[m - i - 1][m - 1]);
      const auto& q = polys[m - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) pm[d] = f.sub(pm[d], f.mul(coef, q[d]));
    }
    polys.push_back(std::move(pm));
  }
  return polys[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, const Fp& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = f.add(f.mul(acc, x), poly[d]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

class CentralCharacterSplitter {
 public:
  CentralCharacterSplitter(const ClassConstants& a, const Fp& f, u64 seed) : a_(a), f_(f), rng_(seed) {}

  // Common eigenvectors (as columns omega with A_i omega = omega_i omega) of all A_i.
  ModMat split() {
    const std::size_t r = a_.classes();
    ModMat whole(r, ModVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) whole[i][i] = 1;
    std::vector<ModMat> pending{whole};
    ModMat done;
    while (!pending.empty()) {
      ModMat space = std::move(pending.back());
      pending.pop_back();
      if (space.size() == 1) {
        done.push_back(space.front());
        continue;
      }
      auto parts = split_once(space);
      for (auto& p : parts) pending.push_back(std::move(p));
    }
    return done;
  }

 private:
  ModVec apply(const std::vector<u64>& weights, const ModVec& v) const {
    const std::size_t r = a_.classes();
    ModVec out(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (weights[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        u64 acc = 0;
        for (std::size_t k = 0; k < r; ++k) {
          if (v[k] != 0) acc = f_.add(acc, f_.mul(static_cast<u64>(a_(i, j, k)) % f_.p, v[k]));
        }
        out[j] = f_.add(out[j], f_.mul(weights[i], acc));
      }
    }
    return out;
  }

  std::vector<ModMat> try_split(ModMat basis, const std::vector<u64>& weights) const {
    const auto pivots = rref(basis, f_);
    const std::size_t d = basis.size();
    ModMat restricted(d, ModVec(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
      const ModVec img = apply(weights, basis[j]);
      for (std::size_t t = 0; t < d; ++t) restricted[t][j] = img[pivots[t]];
    }
    const auto eig = roots(charpoly(restricted, f_), f_);
    if (eig.size() < 2) return {};
    std::vector<ModMat> parts;
    std::size_t total = 0;
    for (u64 lambda : eig) {
      ModMat shifted = restricted;
      for (std::size_t t = 0; t < d; ++t) shifted[t][t] = f_.sub(shifted[t][t], lambda);
      ModMat part;
      for (const auto& coords : nullspace(shifted, f_)) {
        ModVec v(basis.front().size(), 0);
        for (std::size_t t = 0; t < d; ++t) {
          if (coords[t] == 0) continue;
          for (std::size_t c = 0; c < v.size(); ++c) v[c] = f_.add(v[c], f_.mul(coords[t], basis[t][c]));
        }
        part.push_back(std::move(v));
      }
      total += part.size();
      parts.push_back(std::move(part));
    }
    if (total != d) throw Error(ErrorCode::LiftInconsistent, "class algebra is not split semisimple mod p");
    return parts;
  }

  std::vector<ModMat> split_once(const ModMat& space) {
    const std::size_t r = a_.classes();
    std::uniform_int_distribution<u64> coef(0, f_.p - 1);
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<u64> w(r);
      for (auto& x : w) x = coef(rng_);
      auto parts = try_split(space, w);
      if (!parts.empty()) return parts;
    }
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<u64> w(r, 0);
      w[i] = 1;
      auto parts = try_split(space, w);
      if (!parts.empty()) return parts;
    }
    throw Error(ErrorCode::LiftInconsistent, "eigenspace of dimension " + std::to_string(space.size()) + " does not split");
  }

  const ClassConstants& a_;
  const Fp& f_;
  std::mt19937_64 rng_;
};

// descending by value so the trivial character comes first
std::vector<double> embedding_key(const std::vector<CycloScalar>& row) {
  std::vector<double> key;
  for (const auto& v : row) {
    const auto z = v.to_complex();
    key.push_back(-std::round(z.real() * 1e8) / 1e8);
    key.push_back(-std::round(z.imag() * 1e8) / 1e8);
  }
  return key;
}

}  // namespace

std::uint64_t admissible_prime(std::size_t group_order, int exponent, int index) {
  const double floor_bound = 2.0 * std::sqrt(static_cast<double>(group_order));
  int seen = 0;
  for (u64 p = static_cast<u64>(exponent) + 1; p < (1ULL << 31); p += static_cast<u64>(exponent)) {
    if (static_cast<double>(p) <= floor_bound || !is_prime(p)) continue;
    if (seen++ == index) return p;
  }
  throw Error(ErrorCode::PrimeSearchFailed, "no admissible prime below 2^31");
}

CharacterTable character_table(const GroupTable& g, const CharTableOptions& options) {
  return character_table(g, conjugacy_data(g), options);
}

CharacterTable character_table(const GroupTable& g, const ConjugacyData& cd, const CharTableOptions& options) {
  const std::size_t n = g.order();
  const std::size_t r = cd.count();
  const int m = g.exponent();
  const Fp f{admissible_prime(n, m, options.prime_index)};
  const ClassConstants consts(g, cd);

  CentralCharacterSplitter splitter(consts, f, options.seed);
  ModMat central = splitter.split();
  if (central.size() != r) throw Error(ErrorCode::LiftInconsistent, "wrong number of central characters");

  const u64 w = f.pow(primitive_root(f), (f.p - 1) / static_cast<u64>(m));

  CharacterTable ct;
  ct.group_order = n;
  ct.conductor = m;
  ct.prime = f.p;
  ct.class_data = cd;

  struct Row {
    int degree;
    std::vector<CycloScalar> values;
  };
  std::vector<Row> rows;
  for (auto& omega : central) {
    if (omega[0] == 0) throw Error(ErrorCode::LiftInconsistent, "central character vanishes at identity");
    const u64 norm = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, norm);

    // degree^2 = |G| / sum_c omega(c) omega(c^-1) / |c|
    u64 s = 0;
    for (std::size_t c = 0; c < r; ++c) {
      const auto ci = static_cast<std::size_t>(cd.inverse_class[c]);
      s = f.add(s, f.mul(f.mul(omega[c], omega[ci]), f.inv(cd.sizes[c] % f.p)));
    }
    if (s == 0) throw Error(ErrorCode::LiftInconsistent, "degenerate central character");
    const u64 d2 = f.mul(n % f.p, f.inv(s));
    int degree = 0;
    for (u64 d = 1; d * d <= n; ++d) {
      if (f.mul(d, d) == d2 && n % d == 0) {
        degree = static_cast<int>(d);
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::LiftInconsistent, "no integer degree matches mod-p value");

    std::vector<u64> chi_p(r);
    for (std::size_t c = 0; c < r; ++c) {
      chi_p[c] = f.mul(f.mul(static_cast<u64>(degree), omega[c]), f.inv(cd.sizes[c] % f.p));
    }

    std::vector<CycloScalar> values;
    values.reserve(r);
    for (std::size_t c = 0; c < r; ++c) {
      const int ord = g.element_order(cd.representative(static_cast<int>(c)));
      const int step = m / ord;
      const u64 wn = f.pow(w, static_cast<u64>(step));
      const u64 inv_ord = f.inv(static_cast<u64>(ord) % f.p);
      std::vector<u64> along(static_cast<std::size_t>(ord));
      for (int j = 0; j < ord; ++j) {
        along[static_cast<std::size_t>(j)] = chi_p[static_cast<std::size_t>(power_class(g, cd, static_cast<int>(c), j))];
      }
      std::vector<Rational> coeffs(static_cast<std::size_t>(m), Rational(0));
      long total = 0;
      for (int k = 0; k < ord; ++k) {
        u64 acc = 0;
        const u64 wk_inv = f.inv(f.pow(wn, static_cast<u64>(k)));
        u64 twiddle = 1;
        for (int j = 0; j < ord; ++j) {
          acc = f.add(acc, f.mul(along[static_cast<std::size_t>(j)], twiddle));
          twiddle = f.mul(twiddle, wk_inv);
        }
        const u64 mu = f.mul(acc, inv_ord);
        if (mu > static_cast<u64>(degree)) {
          throw Error(ErrorCode::LiftInconsistent, "eigenvalue multiplicity out of range");
        }
        total += static_cast<long>(mu);
        coeffs[static_cast<std::size_t>(k * step)] = static_cast<long>(mu);
      }
      if (total != degree) throw Error(ErrorCode::LiftInconsistent, "eigenvalue multiplicities do not sum to degree");
      values.emplace_back(m, std::move(coeffs));
    }
    rows.push_back({degree, std::move(values)});
  }

  std::vector<std::pair<std::tuple<int, std::vector<double>>, std::size_t>> keys;
  for (std::size_t i = 0; i < rows.size(); ++i) keys.push_back({{rows[i].degree, embedding_key(rows[i].values)}, i});
  std::sort(keys.begin(), keys.end());
  for (const auto& [key, i] : keys) {
    ct.degrees.push_back(rows[i].degree);
    ct.values.push_back(std::move(rows[i].values));
  }

  long sum_sq = 0;
  for (int d : ct.degrees) sum_sq += static_cast<long>(d) * d;
  if (static_cast<std::size_t>(sum_sq) != n) throw Error(ErrorCode::LiftInconsistent, "sum of squared degrees != |G|");
  if (!rows_orthonormal(ct) || !columns_orthogonal(ct)) {
    throw Error(ErrorCode::LiftInconsistent, "orthogonality relations fail");
  }
  return ct;
}

std::vector<CycloScalar> regular_character(const CharacterTable& ct) {
  const std::size_t r = ct.class_data.count();
  std::vector<CycloScalar> reg(r, CycloScalar(ct.conductor));
  for (std::size_t i = 0; i < ct.irrep_count(); ++i) {
    for (std::size_t c = 0; c < r; ++c) reg[c] += ct.values[i][c] * Rational(ct.degrees[i]);
  }
  for (std::size_t c = 0; c < r; ++c) {
    const Rational expect = c == 0 ? Rational(static_cast<long>(ct.group_order)) : Rational(0);
    if (reg[c] != CycloScalar(ct.conductor, expect)) {
      throw Error(ErrorCode::LiftInconsistent, "regular character mismatch at class " + std::to_string(c));
    }
  }
  return reg;
}

bool rows_orthonormal(const CharacterTable& ct) {
  const std::size_t k = ct.irrep_count();
  const std::size_t r = ct.class_data.count();
  std::vector<std::vector<CycloScalar>> conj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < r; ++c) conj[i].push_back(ct.values[i][c].conj());
  const Rational inv_order(1, static_cast<unsigned long>(ct.group_order));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      CycloScalar acc(ct.conductor);
      for (std::size_t c = 0; c < r; ++c) {
        acc += ct.values[i][c] * conj[j][c] * Rational(static_cast<long>(ct.class_data.sizes[c]));
      }
      acc *= inv_order;
      if (acc != CycloScalar(ct.conductor, Rational(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const CharacterTable& ct) {
  const std::size_t k = ct.irrep_count();
  const std::size_t r = ct.class_data.count();
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      CycloScalar acc(ct.conductor);
      for (std::size_t i = 0; i < k; ++i) acc += ct.values[i][c] * ct.values[i][d].conj();
      const Rational expect = c == d ? Rational(static_cast<long>(ct.group_order / ct.class_data.sizes[c])) : Rational(0);
      if (acc != CycloScalar(ct.conductor, expect)) return false;
    }
  }
  return true;
}

std::vector<CycloScalar> decompose(const CharacterTable& ct, const std::vector<CycloScalar>& class_function) {
  const std::size_t r = ct.class_data.count();
  if (class_function.size() != r) throw Error(ErrorCode::DimensionMismatch, "class function length != #classes");
  const Rational inv_order(1, static_cast<unsigned long>(ct.group_order));
  std::vector<CycloScalar> out;
  for (std::size_t i = 0; i < ct.irrep_count(); ++i) {
    CycloScalar acc(ct.conductor);
    for (std::size_t c = 0; c < r; ++c) {
      acc += class_function[c] * ct.values[i][c].conj() * Rational(static_cast<long>(ct.class_data.sizes[c]));
    }
    out.push_back(acc * inv_order);
  }
  return out;
}

}  // namespace grouplie
