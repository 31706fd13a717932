#include "grouplie/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "grouplie/catalog.hpp"
#include "grouplie/error.hpp"
#include "grouplie/lie.hpp"
#include "grouplie/linalg.hpp"

namespace grouplie {

namespace {

std::vector<Element> support_of(const GroupAlgebraElement& a) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (!a.coeffs()[i].is_zero()) out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool check_closure(const LieBasis& basis, const GroupTable& g, int m) {
  RowSpace space(m, g.order());
  for (const auto& v : basis.vectors) space.insert(v.coeffs());
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.vectors.size(); ++j) {
      if (!space.contains(bracket(basis.vectors[i], basis.vectors[j]).coeffs())) return false;
    }
  }
  return true;
}

// t(u s) = 0 for u in L and s in the +1 eigenspace of S.
bool check_orthogonality(const TwistContext& ctx, const LieBasis& basis) {
  const GroupTable& g = ctx.group();
  const int m = ctx.conductor();
  std::vector<GroupAlgebraElement> plus;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    const Element s = ctx.s_image(gx);
    if (s < gx) continue;
    GroupAlgebraElement v = GroupAlgebraElement::delta(g, m, gx);
    v[s] += ctx.alpha().value(gx);
    if (!v.is_zero()) plus.push_back(std::move(v));
  }
  for (const auto& u : basis.vectors) {
    const auto su = support_of(u);
    for (const auto& s : plus) {
      CycloScalar t(m);
      for (Element x : su) {
        const auto& sx = s[g.inverse(x)];
        if (!sx.is_zero()) t += u[x] * sx;
      }
      if (!t.is_zero()) return false;
    }
  }
  return true;
}

// With D = diag(alpha(g)) and rho(u)_{a,b} = u[a b^-1]: u[b a^-1] alpha(b) + alpha(a) u[a b^-1] = 0.
bool check_antiadjoint(const TwistContext& ctx, const LieBasis& basis) {
  const GroupTable& g = ctx.group();
  for (const auto& u : basis.vectors) {
    for (Element x : support_of(u)) {
      for (std::size_t a = 0; a < g.order(); ++a) {
        const auto ea = static_cast<Element>(a);
        const Element b = g.mul(x, ea);  // b a^-1 = x
        CycloScalar entry = u[x] * ctx.alpha().value(b);
        const Element y = g.inverse(x);  // a b^-1
        if (!u[y].is_zero()) entry += ctx.alpha().value(ea) * u[y];
        if (!entry.is_zero()) return false;
      }
    }
  }
  return true;
}

long as_long(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw Error(ErrorCode::VerificationFailed, what + " is not an integer");
  return q.get_num().get_si();
}

}  // namespace

LieReport verify_theorem(const GroupTable& g, const CharacterTable& ct, const LinearCharacter& alpha,
                         const InvolutiveAutomorphism& tau) {
  LieReport r;
  r.group = g.name();
  r.order = g.order();
  r.alpha = alpha.label();
  r.tau = tau.label();

  const TwistContext ctx(g, alpha, tau);
  const IndicatorReport ind = indicator_report(ct, g, alpha, tau);
  for (const auto& f : ind.factors) {
    if (f.dim > 0) r.factors.push_back(f);
  }

  const LieBasis basis = build_lie_basis(ctx);
  r.dim_L_rank = static_cast<long>(basis.dim);
  r.dim_L_formula = lie_dimension_census(g, alpha, tau);
  r.dim_M_predicted = ind.dim_M;
  r.dim_L_trace = as_long(projector_trace(ctx), "projector trace");
  r.dims_ok = r.dim_L_rank == r.dim_L_formula && r.dim_L_rank == r.dim_M_predicted && r.dim_L_rank == r.dim_L_trace;
  if (!r.dims_ok) r.failures.push_back("dims");

  r.closure_ok = check_closure(basis, g, ctx.conductor());
  if (!r.closure_ok) r.failures.push_back("closure");

  r.center_generators_predicted = ind.center_dim;
  r.center_dim_predicted = ind.center_dim;
  for (const auto& f : ind.factors) {
    if (f.label == "so(2)") ++r.center_dim_predicted;
  }
  try {
    r.center_generators = static_cast<long>(center_basis(ctx, ct.class_data, basis).size());
    r.centrality_ok = r.center_generators == r.center_generators_predicted;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CentralityFailed) throw;
    r.centrality_ok = false;
  }
  r.center_dim_exact = basis.dim == basis.vectors.size() ? static_cast<long>(lie_center_dim(basis)) : -1;
  if (r.center_dim_exact != r.center_dim_predicted) r.centrality_ok = false;
  if (!r.centrality_ok) r.failures.push_back("centrality");

  r.orthogonality_ok = check_orthogonality(ctx, basis);
  if (!r.orthogonality_ok) r.failures.push_back("orthogonality");

  if (tau.is_identity()) {
    r.antiadjoint_ok = check_antiadjoint(ctx, basis);
    if (!*r.antiadjoint_ok) r.failures.push_back("antiadjoint");
  }

  long weighted = 0;
  for (const auto& irr : ind.irreps) weighted += static_cast<long>(irr.nu) * irr.degree;
  const long i_minus_j = ind.involutions_plus - ind.involutions_minus;
  r.bookkeeping_ok = static_cast<long>(g.order()) - 2 * r.dim_L_rank == i_minus_j && weighted == i_minus_j;
  for (const auto& irr : ind.irreps) {
    if ((irr.nu == 0) != (irr.parity == Parity::Odd)) r.bookkeeping_ok = false;
  }
  if (!r.bookkeeping_ok) r.failures.push_back("bookkeeping");

  long self_paired = 0;
  for (const auto& pc : ind.pairing) {
    if (pc.kind == PairingClass::Kind::Osp) ++self_paired;
  }
  r.center_lemma_ok = ind.fixed_classes_plus - ind.fixed_classes_minus == self_paired &&
                      ind.swapped_class_pairs + ind.fixed_classes_minus == ind.center_dim &&
                      r.center_generators == ind.center_dim;
  if (!r.center_lemma_ok) r.failures.push_back("center_lemma");
  return r;
}

LieReport verify_theorem(const GroupTable& g, const LinearCharacter& alpha, const InvolutiveAutomorphism& tau) {
  return verify_theorem(g, character_table(g), alpha, tau);
}

void require_passed(const LieReport& report) {
  if (!report.passed()) {
    throw Error(ErrorCode::VerificationFailed, report.group + " alpha=" + report.alpha + " tau=" + report.tau +
                                                   ": " + report.failures.front());
  }
}

GroupTable subgroup(const GroupTable& g, const std::vector<Element>& elements, std::string name) {
  std::vector<Element> elems = elements;
  std::sort(elems.begin(), elems.end());
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const int k = index[static_cast<std::size_t>(g.mul(elems[i], elems[j]))];
      if (k < 0) throw Error(ErrorCode::BadParameters, "element set is not closed under multiplication");
      table[i][j] = k;
    }
  }
  return GroupTable::from_mult_table(table, std::move(name));
}

std::vector<Element> kernel(const GroupTable& g, const LinearCharacter& alpha) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (alpha.is_one_at(static_cast<Element>(x))) out.push_back(static_cast<Element>(x));
  }
  return out;
}

CliffordResult verify_clifford(const GroupTable& g, const LinearCharacter& alpha) {
  if (alpha.is_trivial()) throw Error(ErrorCode::BadParameters, "Clifford check needs a nontrivial alpha");
  const int m = alpha.conductor();
  const auto ker = kernel(g, alpha);
  const GroupTable h = subgroup(g, ker, "Ker " + alpha.label());

  // L(H) pushed into kG through the (ascending) index map
  std::vector<CycloVector> lh;
  {
    const TwistContext hctx(h, LinearCharacter(m, std::vector<int>(h.order(), 0), "trivial"), identity_automorphism(h));
    for (const auto& v : build_lie_basis(hctx).vectors) {
      CycloVector w(g.order(), CycloScalar(m));
      for (std::size_t i = 0; i < h.order(); ++i) w[static_cast<std::size_t>(ker[i])] = v.coeffs()[i];
      lh.push_back(std::move(w));
    }
  }
  const auto id = identity_automorphism(g);
  const LinearCharacter trivial(m, std::vector<int>(g.order(), 0), "trivial");
  const auto lg = build_lie_basis(TwistContext(g, trivial, id));
  const auto la = build_lie_basis(TwistContext(g, alpha, id));
  const CycloMatrix inter = intersect(coefficient_matrix(lg.vectors, g, m), coefficient_matrix(la.vectors, g, m));

  CliffordResult res;
  RowSpace lh_space(m, g.order());
  for (const auto& v : lh) lh_space.insert(v);
  res.dim_L_kernel = static_cast<long>(lh_space.dimension());
  res.dim_intersection = static_cast<long>(rank(inter));
  res.ok = res.dim_L_kernel == res.dim_intersection;
  for (std::size_t i = 0; res.ok && i < inter.rows(); ++i) res.ok = lh_space.contains(inter.row(i));
  return res;
}

namespace {

CycloScalar inner(const std::vector<CycloScalar>& a, const std::vector<CycloScalar>& b, const ConjugacyData& cd,
                  std::size_t order, int m) {
  CycloScalar s(m);
  for (std::size_t c = 0; c < cd.count(); ++c) s += a[c] * b[c].conj() * Rational(static_cast<long>(cd.sizes[c]));
  s *= Rational(1, static_cast<unsigned long>(order));
  return s;
}

}  // namespace

KawanakaResult verify_kawanaka(const GroupTable& g, const InvolutiveAutomorphism& tau) {
  validate_automorphism(g, tau.map(), tau.label());
  const GroupTable ext = semidirect_product(g, tau);
  const CharacterTable ct_ext = character_table(ext);
  const int m = ct_ext.conductor;
  const std::size_t n = g.order();

  std::vector<int> eps_exp(ext.order(), 0);
  for (std::size_t x = n; x < ext.order(); ++x) eps_exp[x] = m / 2;
  const LinearCharacter eps(m, eps_exp, "epsilon");
  check_linear_character(ext, eps);
  const auto f_eps = weighted_fs(ct_ext, eps);

  const CharacterTable ct_g = character_table(g);
  const auto& cdg = ct_g.class_data;
  const auto fs_g = weighted_fs(ct_g, LinearCharacter(ct_g.conductor, std::vector<int>(n, 0), "trivial"));
  const auto ctau_g = kawanaka(ct_g, g, tau);
  std::vector<std::vector<CycloScalar>> chi_g;
  for (const auto& row : ct_g.values) {
    std::vector<CycloScalar> e;
    for (const auto& v : row) e.push_back(v.embed(m));
    chi_g.push_back(std::move(e));
  }

  KawanakaResult res;
  res.extension_order = ext.order();
  res.ok = true;
  for (std::size_t i = 0; i < ct_ext.irrep_count(); ++i) {
    // G sits in the extension as the indices below |G|
    auto res_at = [&](Element x) -> const CycloScalar& {
      return ct_ext.values[i][static_cast<std::size_t>(ct_ext.class_data.class_of[static_cast<std::size_t>(x)])];
    };
    KawanakaRow row;
    row.degree = ct_ext.degrees[i];
    row.f_epsilon = f_eps[i];
    row.f1_res = CycloScalar(m);
    row.c_tau_res = CycloScalar(m);
    for (std::size_t x = 0; x < n; ++x) {
      const auto gx = static_cast<Element>(x);
      row.f1_res += res_at(g.mul(gx, gx));
      row.c_tau_res += res_at(g.mul(gx, tau(gx)));
    }
    row.f1_res *= Rational(1, static_cast<unsigned long>(n));
    row.c_tau_res *= Rational(1, static_cast<unsigned long>(n));
    row.ok = CycloScalar(m, Rational(2 * row.f_epsilon)) == row.f1_res - row.c_tau_res;

    std::vector<CycloScalar> res_fn;
    for (std::size_t c = 0; c < cdg.count(); ++c) res_fn.push_back(res_at(cdg.representative(static_cast<int>(c))));
    std::vector<int> parts;
    for (std::size_t j = 0; j < chi_g.size(); ++j) {
      const auto mult = inner(res_fn, chi_g[j], cdg, n, m).as_rational();
      if (!mult || mult->get_den() != 1) throw Error(ErrorCode::VerificationFailed, "non-integral multiplicity");
      for (long k = 0; k < mult->get_num().get_si(); ++k) parts.push_back(static_cast<int>(j));
    }
    if (parts.size() == 2 && parts[0] != parts[1]) {
      row.split = true;
      const auto a = static_cast<std::size_t>(parts[0]);
      const auto b = static_cast<std::size_t>(parts[1]);
      row.ok = row.ok && ctau_g[a] == ctau_g[b] && fs_g[a] == fs_g[b];
    }
    res.ok = res.ok && row.ok;
    res.rows.push_back(std::move(row));
  }
  return res;
}

InvolutiveAutomorphism resolve_tau(const GroupTable& g, const std::string& selector) {
  if (selector == "id") return identity_automorphism(g);
  if (selector == "inv") return inversion_automorphism(g);
  if (selector.rfind("conj", 0) == 0 && selector.size() > 4) {
    try {
      const int s = std::stoi(selector.substr(4));
      if (s < 0 || static_cast<std::size_t>(s) >= g.order()) throw Error(ErrorCode::UsageError, "conjugator out of range");
      return conjugation_automorphism(g, s);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::UsageError, "bad conjugation selector: " + selector);
    }
  }
  const bool prefixed = selector.rfind("auto:", 0) == 0;
  if (prefixed || std::filesystem::is_regular_file(selector)) {
    const std::string path = prefixed ? selector.substr(5) : selector;
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InputError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return automorphism_from_json(g, ss.str());
  }
  throw Error(ErrorCode::UsageError, "unknown tau selector '" + selector + "' (expected id, inv, conj<k>, auto:<file> or a file path)");
}

LinearCharacter resolve_alpha(const GroupTable& g, const std::string& label) {
  const auto chars = linear_characters(g);
  std::string available;
  for (const auto& a : chars) {
    if (a.label() == label) return a;
    available += (available.empty() ? "" : ", ") + a.label();
  }
  throw Error(ErrorCode::UsageError, "no linear character '" + label + "' on " + g.name() + "; available: " + available);
}

std::vector<LieReport> run_suite(const SuiteOptions& options) {
  std::vector<std::string> specs = options.groups;
  if (specs.empty()) {
    for (const auto& item : default_suite(options.max_order)) specs.push_back(item.spec);
  }

  std::vector<LieReport> out;
  for (const auto& spec : specs) {
    const GroupTable g = parse_group_spec(spec);
    if (g.order() > options.max_order) continue;
    CharTableOptions cto;
    cto.seed = options.seed;
    const CharacterTable ct = character_table(g, cto);

    std::vector<InvolutiveAutomorphism> taus;
    if (options.tau == "all") {
      taus = curated_automorphisms(g);
    } else if (options.tau == "inv" && !g.is_abelian()) {
      continue;
    } else {
      taus.push_back(resolve_tau(g, options.tau));
    }
    std::vector<LinearCharacter> alphas;
    if (options.alpha == "all") alphas = linear_characters(g);
    else alphas.push_back(resolve_alpha(g, options.alpha));

    for (const auto& tau : taus) {
      std::optional<bool> kaw;
      if (options.kawanaka && !tau.is_identity()) {
        try {
          kaw = verify_kawanaka(g, tau).ok;
        } catch (const Error&) {
          kaw = false;
        }
      }
      for (const auto& alpha : alphas) {
        if (!compatible(alpha, tau)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        LieReport r;
        try {
          r = verify_theorem(g, ct, alpha, tau);
        } catch (const Error& e) {
          r.group = g.name();
          r.order = g.order();
          r.alpha = alpha.label();
          r.tau = tau.label();
          r.failures.push_back(std::string("error: ") + e.what());
        }
        if (options.clifford && tau.is_identity() && !alpha.is_trivial()) {
          try {
            r.clifford_ok = verify_clifford(g, alpha).ok;
          } catch (const Error&) {
            r.clifford_ok = false;
          }
          if (!*r.clifford_ok) r.failures.push_back("clifford");
        }
        if (kaw) {
          r.kawanaka_ok = kaw;
          if (!*kaw) r.failures.push_back("kawanaka");
        }
        if (options.timing) {
          r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        out.push_back(std::move(r));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const LieReport& a, const LieReport& b) {
    return std::tie(a.group, a.alpha, a.tau) < std::tie(b.group, b.alpha, b.tau);
  });
  return out;
}

}  // namespace grouplie
