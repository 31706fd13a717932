#include "grouplie/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "grouplie/error.hpp"

namespace grouplie {

namespace {

std::string triple_str(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

GroupTable GroupTable::from_mult_table(const std::vector<std::vector<int>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::BadTable, "empty table");
  if (n > kDefaultOrderCap) {
    throw Error(ErrorCode::OrderCapExceeded, "order " + std::to_string(n) + " exceeds " +
                                                 std::to_string(kDefaultOrderCap));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorCode::BadTable, "row " + std::to_string(i) + " has wrong length");
    for (int v : table[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::BadTable, "entry " + std::to_string(v) + " out of range in row " + std::to_string(i));
      }
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a][b]); };

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool unit = true;
    for (std::size_t x = 0; x < n && unit; ++x) unit = at(c, x) == x && at(x, c) == x;
    if (unit) e = c;
  }
  if (e == n) throw Error(ErrorCode::NoIdentity, "no two-sided identity in table '" + name + "'");

  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h) found = at(g, h) == e && at(h, g) == e;
    if (!found) throw Error(ErrorCode::NoInverse, "element " + std::to_string(g) + " has no two-sided inverse");
  }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw Error(ErrorCode::NotAssociative,
                  "(ab)c != a(bc) for triple " +
                      triple_str(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c)));
    }
  };
  if (n <= kExhaustiveAssociativityCap) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  // relabel: swap e <-> 0
  auto relabel = [&](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };
  GroupTable g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.mult_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.mult_[relabel(a) * n + relabel(b)] = static_cast<Element>(relabel(at(a, b)));
  g.finish();
  return g;
}

GroupTable GroupTable::from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                                   std::string name, std::size_t order_cap) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw Error(ErrorCode::BadParameters, "generators have different degrees");
    std::vector<bool> seen(degree, false);
    for (int x : p) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[static_cast<std::size_t>(x)]) {
        throw Error(ErrorCode::BadParameters, "generator is not a permutation of 0.." + std::to_string(degree - 1));
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  using Perm = std::vector<int>;
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm out(degree);
    for (std::size_t x = 0; x < degree; ++x) out[x] = a[static_cast<std::size_t>(b[x])];
    return out;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      Perm next = compose(elems[head], gen);
      if (index.count(next)) continue;
      if (elems.size() >= order_cap) {
        throw Error(ErrorCode::OrderCapExceeded, "closure exceeds order cap " + std::to_string(order_cap));
      }
      index.emplace(next, static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
    }
  }

  const std::size_t n = elems.size();
  GroupTable g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.mult_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mult_[a * n + b] = index.at(compose(elems[a], elems[b]));
  g.finish();
  return g;
}

void GroupTable::finish() {
  inv_.assign(n_, 0);
  for (std::size_t g = 0; g < n_; ++g) {
    for (std::size_t h = 0; h < n_; ++h) {
      if (mult_[g * n_ + h] == 0) {
        inv_[g] = static_cast<Element>(h);
        break;
      }
    }
  }
  orders_.assign(n_, 1);
  exponent_ = 1;
  for (std::size_t g = 0; g < n_; ++g) {
    Element x = static_cast<Element>(g);
    int k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Element>(g));
      ++k;
    }
    orders_[g] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

Element GroupTable::power(Element g, long k) const {
  const long ord = element_order(g);
  long e = k % ord;
  if (e < 0) e += ord;
  Element x = 0;
  for (long i = 0; i < e; ++i) x = mul(x, g);
  return x;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mult_[a * n_ + b] != mult_[b * n_ + a]) return false;
  return true;
}

std::vector<std::vector<int>> GroupTable::table() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) out[a][b] = mult_[a * n_ + b];
  return out;
}

ConjugacyData conjugacy_data(const GroupTable& g) {
  const std::size_t n = g.order();
  ConjugacyData cd;
  cd.class_of.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (cd.class_of[x] >= 0) continue;
    const int c = static_cast<int>(cd.classes.size());
    std::vector<Element> members;
    for (std::size_t h = 0; h < n; ++h) {
      const auto hh = static_cast<Element>(h);
      const Element y = g.mul(g.mul(hh, static_cast<Element>(x)), g.inverse(hh));
      if (cd.class_of[static_cast<std::size_t>(y)] < 0) {
        cd.class_of[static_cast<std::size_t>(y)] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    cd.sizes.push_back(members.size());
    cd.classes.push_back(std::move(members));
  }
  for (std::size_t c = 0; c < cd.classes.size(); ++c) {
    const Element r = cd.classes[c].front();
    cd.inverse_class.push_back(cd.class_of[static_cast<std::size_t>(g.inverse(r))]);
    cd.square_class.push_back(cd.class_of[static_cast<std::size_t>(g.mul(r, r))]);
  }
  return cd;
}

int power_class(const GroupTable& g, const ConjugacyData& cd, int c, long k) {
  return cd.class_of[static_cast<std::size_t>(g.power(cd.representative(c), k))];
}

LinearCharacter::LinearCharacter(int conductor, std::vector<int> exponents, std::string label)
    : m_(conductor), exps_(std::move(exponents)), label_(std::move(label)) {
  for (auto& e : exps_) e = ((e % m_) + m_) % m_;
}

bool LinearCharacter::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool LinearCharacter::is_real() const {
  return std::all_of(exps_.begin(), exps_.end(), [this](int e) { return e == 0 || 2 * e == m_; });
}

void check_linear_character(const GroupTable& g, const LinearCharacter& alpha) {
  const std::size_t n = g.order();
  if (alpha.exponents().size() != n) {
    throw Error(ErrorCode::BadParameters, "character length does not match group order");
  }
  if (g.exponent() % alpha.conductor() != 0 && alpha.conductor() % g.exponent() != 0) {
    throw Error(ErrorCode::ConductorMismatch, "character conductor incompatible with group exponent");
  }
  const int m = alpha.conductor();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = alpha.exponent(static_cast<Element>(a));
      const auto eb = alpha.exponent(static_cast<Element>(b));
      const auto eab = alpha.exponent(g.mul(static_cast<Element>(a), static_cast<Element>(b)));
      if ((ea + eb) % m != eab) {
        throw Error(ErrorCode::NotHomomorphism, "alpha(gh) != alpha(g)alpha(h) for g=" + std::to_string(a) +
                                                    ", h=" + std::to_string(b));
      }
    }
  }
}

namespace {

std::vector<Element> subgroup_closure(const GroupTable& g, std::vector<Element> gens) {
  const std::size_t n = g.order();
  std::vector<bool> in(n, false);
  std::vector<Element> elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Element s : gens) {
      const Element x = g.mul(elems[head], s);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = true;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::vector<Element> commutator_subgroup(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Element> gens;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = static_cast<Element>(a);
      const auto y = static_cast<Element>(b);
      const Element c = g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        gens.push_back(c);
      }
    }
  }
  return subgroup_closure(g, gens);
}

std::vector<LinearCharacter> linear_characters(const GroupTable& g) {
  const std::size_t n = g.order();
  const int m = g.exponent();
  const std::vector<Element> derived = commutator_subgroup(g);

  // cosets of [G,G]
  std::vector<int> coset(n, -1);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element d : derived) coset[static_cast<std::size_t>(g.mul(static_cast<Element>(x), d))] = id;
  }
  const std::size_t q = reps.size();
  auto qmul = [&](int a, int b) { return coset[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))]; };

  // Extend characters one cyclic step at a time: H' = <H, s> = ⋃_{j<d} s^j H with s^d ∈ H.
  std::vector<int> pos_in_h(q, -1);
  std::vector<int> h_elems{0};
  pos_in_h[0] = 0;
  std::vector<std::vector<int>> chars{{0}};  // values aligned with h_elems
  while (h_elems.size() < q) {
    int s = 0;
    while (pos_in_h[static_cast<std::size_t>(s)] >= 0) ++s;
    int d = 1;
    int sd = s;
    while (pos_in_h[static_cast<std::size_t>(sd)] < 0) {
      sd = qmul(sd, s);
      ++d;
    }
    const std::size_t old_size = h_elems.size();
    std::vector<int> new_elems = h_elems;
    int sj = s;
    for (int j = 1; j < d; ++j) {
      for (std::size_t i = 0; i < old_size; ++i) new_elems.push_back(qmul(sj, h_elems[i]));
      sj = qmul(sj, s);
    }
    std::vector<std::vector<int>> next_chars;
    for (const auto& chi : chars) {
      const int target = chi[static_cast<std::size_t>(pos_in_h[static_cast<std::size_t>(sd)])];
      for (int b = 0; b < m; ++b) {
        if ((static_cast<long>(d) * b - target) % m != 0) continue;
        std::vector<int> ext;
        ext.reserve(new_elems.size());
        for (int j = 0; j < d; ++j)
          for (std::size_t i = 0; i < old_size; ++i) ext.push_back((j * b + chi[i]) % m);
        next_chars.push_back(std::move(ext));
      }
    }
    h_elems = std::move(new_elems);
    for (std::size_t i = 0; i < h_elems.size(); ++i) pos_in_h[static_cast<std::size_t>(h_elems[i])] = static_cast<int>(i);
    chars = std::move(next_chars);
  }
  if (chars.size() != q) throw Error(ErrorCode::LiftInconsistent, "character count differs from |G/[G,G]|");

  std::vector<std::vector<int>> values;
  for (const auto& chi : chars) {
    std::vector<int> v(n);
    for (std::size_t x = 0; x < n; ++x) {
      v[x] = chi[static_cast<std::size_t>(pos_in_h[static_cast<std::size_t>(coset[x])])];
    }
    values.push_back(std::move(v));
  }
  std::sort(values.begin(), values.end());

  std::vector<LinearCharacter> out;
  for (auto& v : values) out.emplace_back(m, std::move(v), "");
  const auto real_nontrivial =
      std::count_if(out.begin(), out.end(), [](const LinearCharacter& a) { return !a.is_trivial() && a.is_real(); });
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].is_trivial()) out[k].set_label("trivial");
    else if (real_nontrivial == 1 && out[k].is_real()) out[k].set_label("sign");
    else out[k].set_label("lin" + std::to_string(k));
  }
  return out;
}

bool InvolutiveAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<Element>(i)) return false;
  return true;
}

InvolutiveAutomorphism validate_automorphism(const GroupTable& g, const std::vector<Element>& map,
                                             std::string label) {
  const std::size_t n = g.order();
  if (map.size() != n) {
    throw Error(ErrorCode::BadParameters, "automorphism map has length " + std::to_string(map.size()) +
                                              ", group order is " + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  for (Element x : map) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::NotHomomorphism, "map is not a bijection");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = static_cast<Element>(a);
      const auto y = static_cast<Element>(b);
      if (map[static_cast<std::size_t>(g.mul(x, y))] != g.mul(map[a], map[b])) {
        throw Error(ErrorCode::NotHomomorphism,
                    "tau(gh) != tau(g)tau(h) for g=" + std::to_string(a) + ", h=" + std::to_string(b));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (map[static_cast<std::size_t>(map[a])] != static_cast<Element>(a)) {
      throw Error(ErrorCode::NotInvolutive, "tau(tau(g)) != g for g=" + std::to_string(a));
    }
  }
  return InvolutiveAutomorphism(map, std::move(label));
}

InvolutiveAutomorphism identity_automorphism(const GroupTable& g) {
  std::vector<Element> map(g.order());
  std::iota(map.begin(), map.end(), 0);
  return InvolutiveAutomorphism(std::move(map), "id");
}

InvolutiveAutomorphism inversion_automorphism(const GroupTable& g) {
  std::vector<Element> map(g.order());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g.inverse(static_cast<Element>(x));
  return validate_automorphism(g, map, "inv");
}

InvolutiveAutomorphism conjugation_automorphism(const GroupTable& g, Element s) {
  std::vector<Element> map(g.order());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g.mul(g.mul(s, static_cast<Element>(x)), g.inverse(s));
  return validate_automorphism(g, map, "conj" + std::to_string(s));
}

bool compatible(const LinearCharacter& alpha, const InvolutiveAutomorphism& tau) {
  const auto& e = alpha.exponents();
  for (std::size_t x = 0; x < e.size(); ++x) {
    if (e[static_cast<std::size_t>(tau(static_cast<Element>(x)))] != e[x]) return false;
  }
  return true;
}

}  // namespace grouplie
