#include "grouplie/indicators.hpp"

#include <algorithm>

#include "grouplie/error.hpp"

namespace grouplie {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Orthogonal: return "orthogonal";
    case FactorKind::Symplectic: return "symplectic";
    case FactorKind::Paired: return "paired";
  }
  return "?";
}

int indicator_value(const CycloScalar& exact, const std::string& what) {
  const auto q = exact.as_rational();
  if (q) {
    if (*q == 1) return 1;
    if (*q == 0) return 0;
    if (*q == -1) return -1;
  }
  throw Error(ErrorCode::IndicatorOutOfRange, what + " = " + exact.to_string());
}

namespace {

void require_compatible(const LinearCharacter& alpha, const InvolutiveAutomorphism& tau) {
  if (!compatible(alpha, tau)) {
    throw Error(ErrorCode::IncompatiblePair, "alpha(tau(g)) != alpha(g) for alpha=" + alpha.label() +
                                                 ", tau=" + tau.label());
  }
}

// (1/|G|) sum over elements of weight(g) * chi(class(target(g))) for every irrep, with the
// weights pre-accumulated per target class.
std::vector<CycloScalar> class_weighted_sums(const CharacterTable& ct, const std::vector<CycloScalar>& per_class) {
  const std::size_t r = ct.class_data.count();
  const Rational inv_order(1, static_cast<unsigned long>(ct.group_order));
  std::vector<CycloScalar> out;
  for (std::size_t i = 0; i < ct.irrep_count(); ++i) {
    CycloScalar acc(ct.conductor);
    for (std::size_t c = 0; c < r; ++c) {
      if (!per_class[c].is_zero()) acc += per_class[c] * ct.values[i][c];
    }
    out.push_back(acc * inv_order);
  }
  return out;
}

std::vector<int> to_indicators(const std::vector<CycloScalar>& exact, const std::string& name) {
  std::vector<int> out;
  for (std::size_t i = 0; i < exact.size(); ++i) out.push_back(indicator_value(exact[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

std::string superscript(std::size_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n);
  std::string out;
  for (char ch : s) out += digits[ch - '0'];
  return out;
}

}  // namespace

std::vector<int> weighted_fs(const CharacterTable& ct, const LinearCharacter& alpha) {
  const auto& cd = ct.class_data;
  const std::size_t r = cd.count();
  const int m = ct.conductor;
  std::vector<CycloScalar> per_class(r, CycloScalar(m));
  for (std::size_t c = 0; c < r; ++c) {
    const Element rep = cd.representative(static_cast<int>(c));
    CycloScalar w = CycloScalar::root_of_unity(m, -static_cast<long>(alpha.exponent(rep)) * (m / alpha.conductor()));
    per_class[static_cast<std::size_t>(cd.square_class[c])] += w * Rational(static_cast<long>(cd.sizes[c]));
  }
  return to_indicators(class_weighted_sums(ct, per_class), "F_" + alpha.label());
}

std::vector<CycloScalar> twisted_indicator_exact(const CharacterTable& ct, const GroupTable& g,
                                                 const LinearCharacter& alpha, const InvolutiveAutomorphism& tau) {
  const auto& cd = ct.class_data;
  const int m = ct.conductor;
  // count[class][alpha exponent] of g tau(g)
  std::vector<std::vector<long>> count(cd.count(), std::vector<long>(static_cast<std::size_t>(alpha.conductor()), 0));
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    const Element y = g.mul(gx, tau(gx));
    ++count[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(y)])][static_cast<std::size_t>(alpha.exponent(gx))];
  }
  std::vector<CycloScalar> per_class(cd.count(), CycloScalar(m));
  const long step = m / alpha.conductor();
  for (std::size_t c = 0; c < cd.count(); ++c) {
    for (std::size_t e = 0; e < count[c].size(); ++e) {
      if (count[c][e] == 0) continue;
      per_class[c] += CycloScalar::root_of_unity(m, -static_cast<long>(e) * step) * Rational(count[c][e]);
    }
  }
  return class_weighted_sums(ct, per_class);
}

std::vector<int> kawanaka(const CharacterTable& ct, const GroupTable& g, const InvolutiveAutomorphism& tau) {
  const LinearCharacter trivial(ct.conductor, std::vector<int>(g.order(), 0), "trivial");
  return to_indicators(twisted_indicator_exact(ct, g, trivial, tau), "c_" + tau.label());
}

std::vector<int> twisted_indicator(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                                   const InvolutiveAutomorphism& tau) {
  require_compatible(alpha, tau);
  return to_indicators(twisted_indicator_exact(ct, g, alpha, tau), "nu_" + alpha.label() + "," + tau.label());
}

std::vector<int> class_map(const GroupTable& g, const ConjugacyData& cd, const InvolutiveAutomorphism& tau) {
  (void)g;
  std::vector<int> out;
  for (std::size_t c = 0; c < cd.count(); ++c) {
    out.push_back(cd.class_of[static_cast<std::size_t>(tau(cd.representative(static_cast<int>(c))))]);
  }
  return out;
}

std::vector<int> partners(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                          const InvolutiveAutomorphism& tau) {
  require_compatible(alpha, tau);
  const auto& cd = ct.class_data;
  const std::size_t r = cd.count();
  const int m = ct.conductor;
  const auto tc = class_map(g, cd, tau);
  std::vector<int> out;
  for (std::size_t i = 0; i < ct.irrep_count(); ++i) {
    std::vector<CycloScalar> target;
    for (std::size_t c = 0; c < r; ++c) {
      const Element rep = cd.representative(static_cast<int>(c));
      const auto a = CycloScalar::root_of_unity(m, static_cast<long>(alpha.exponent(rep)) * (m / alpha.conductor()));
      target.push_back(a * ct.values[i][static_cast<std::size_t>(tc[c])].conj());
    }
    int found = -1;
    for (std::size_t j = 0; j < ct.irrep_count() && found < 0; ++j) {
      if (ct.values[j] == target) found = static_cast<int>(j);
    }
    if (found < 0) throw Error(ErrorCode::PartnerNotFound, "no irrep matches alpha*conj(chi)∘tau for irrep " + std::to_string(i));
    out.push_back(found);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[static_cast<std::size_t>(out[i])] != static_cast<int>(i)) {
      throw Error(ErrorCode::PartnerNotFound, "partner map is not an involution at irrep " + std::to_string(i));
    }
  }
  return out;
}

std::vector<PairingClass> pairing(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                                  const InvolutiveAutomorphism& tau) {
  const auto partner = partners(ct, g, alpha, tau);
  std::vector<PairingClass> out;
  for (std::size_t i = 0; i < partner.size(); ++i) {
    const int j = partner[i];
    if (j == static_cast<int>(i)) out.push_back({{j}, PairingClass::Kind::Osp});
    else if (j > static_cast<int>(i)) out.push_back({{static_cast<int>(i), j}, PairingClass::Kind::Gl});
  }
  return out;
}

InvolutionCounts involution_counts(const GroupTable& g, const LinearCharacter& alpha, const InvolutiveAutomorphism& tau) {
  require_compatible(alpha, tau);
  InvolutionCounts out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    if (tau(gx) != g.inverse(gx)) continue;
    if (alpha.is_one_at(gx)) ++out.plus;
    else if (alpha.is_minus_one_at(gx)) ++out.minus;
    else throw Error(ErrorCode::AlphaNotReal, "alpha(" + std::to_string(x) + ") is not +-1 on a fixed element");
  }
  return out;
}

long lie_dimension_census(const GroupTable& g, const LinearCharacter& alpha, const InvolutiveAutomorphism& tau) {
  long moved = 0;
  long fixed_nontrivial = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    if (tau(gx) != g.inverse(gx)) ++moved;
    else if (!alpha.is_one_at(gx)) ++fixed_nontrivial;
  }
  return moved / 2 + fixed_nontrivial;
}

IndicatorReport indicator_report(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                                 const InvolutiveAutomorphism& tau) {
  require_compatible(alpha, tau);
  const auto f_alpha = weighted_fs(ct, alpha);
  const auto c_tau = kawanaka(ct, g, tau);
  const auto nu = twisted_indicator(ct, g, alpha, tau);
  const auto partner = partners(ct, g, alpha, tau);

  IndicatorReport rep;
  rep.pairing = pairing(ct, g, alpha, tau);
  for (std::size_t i = 0; i < ct.irrep_count(); ++i) {
    IrrepIndicators ind;
    ind.degree = ct.degrees[i];
    ind.f_alpha = f_alpha[i];
    ind.c_tau = c_tau[i];
    ind.nu = nu[i];
    ind.partner = partner[i];
    ind.parity = partner[i] == static_cast<int>(i) ? Parity::Even : Parity::Odd;
    const long n = ind.degree;
    if (ind.parity == Parity::Odd) {
      ind.factor = FactorKind::Paired;
      ind.factor_dim = n * n;
    } else if (ind.nu == 1) {
      ind.factor = FactorKind::Orthogonal;
      ind.factor_dim = n * (n - 1) / 2;
    } else if (ind.nu == -1) {
      ind.factor = FactorKind::Symplectic;
      ind.factor_dim = n * (n + 1) / 2;
    } else {
      throw Error(ErrorCode::IndicatorOutOfRange,
                  "self-paired irrep " + std::to_string(i) + " has vanishing twisted indicator");
    }
    rep.irreps.push_back(ind);
  }

  for (const auto& pc : rep.pairing) {
    const auto& ind = rep.irreps[static_cast<std::size_t>(pc.members.front())];
    const std::string n = std::to_string(ind.degree);
    std::string label = ind.factor == FactorKind::Paired ? "gl(" + n + ")"
                        : ind.factor == FactorKind::Orthogonal ? "so(" + n + ")"
                                                                : "sp(" + n + ")";
    rep.factors.push_back({label, ind.factor_dim, pc.members});
    rep.dim_M += ind.factor_dim;
    if (pc.kind == PairingClass::Kind::Gl) ++rep.center_dim;
  }

  const auto counts = involution_counts(g, alpha, tau);
  rep.involutions_plus = counts.plus;
  rep.involutions_minus = counts.minus;
  rep.dim_L_formula = lie_dimension_census(g, alpha, tau);

  const auto& cd = ct.class_data;
  const auto tc = class_map(g, cd, tau);
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const auto s = static_cast<std::size_t>(cd.inverse_class[static_cast<std::size_t>(tc[c])]);
    const Element rep_c = cd.representative(static_cast<int>(c));
    if (s == c) {
      if (alpha.is_one_at(rep_c)) ++rep.fixed_classes_plus;
      else if (alpha.is_minus_one_at(rep_c)) ++rep.fixed_classes_minus;
      else throw Error(ErrorCode::AlphaNotReal, "alpha not +-1 on a class fixed by c -> tau(c)^-1");
    } else if (s > c) {
      ++rep.swapped_class_pairs;
    }
  }
  return rep;
}

std::string render_factors(const std::vector<Factor>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j].label == factors[i].label) ++j;
    if (!out.empty()) out += " ⊕ ";
    out += factors[i].label;
    if (j - i > 1) out += superscript(j - i);
    i = j;
  }
  return out;
}

}  // namespace grouplie
