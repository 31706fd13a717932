#include "grouplie/report_io.hpp"

#include "grouplie/error.hpp"

namespace grouplie {

namespace {

Json cplx(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::InputError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InputError, std::string("field '") + key + "': " + e.what());
  }
}

std::optional<bool> get_opt_bool(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<bool>(j, key);
}

Json opt(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Parity parity_from(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw Error(ErrorCode::InputError, "bad parity '" + s + "'");
}

FactorKind factor_kind_from(const std::string& s) {
  for (auto k : {FactorKind::Orthogonal, FactorKind::Symplectic, FactorKind::Paired}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::InputError, "bad factor kind '" + s + "'");
}

Json factor_to_json(const Factor& f) { return {{"label", f.label}, {"dim", f.dim}, {"members", f.members}}; }

Factor factor_from_json(const Json& j) {
  return {get<std::string>(j, "label"), get<long>(j, "dim"), get<std::vector<int>>(j, "members")};
}

}  // namespace

Json scalar_to_json(const CycloScalar& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_string(c));
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycloScalar scalar_from_json(const Json& j) {
  const int m = get<int>(j, "conductor");
  if (m < 1) throw Error(ErrorCode::InputError, "conductor must be positive");
  std::vector<Rational> c;
  for (const auto& s : get<std::vector<std::string>>(j, "coeffs")) c.push_back(rational_from_string(s));
  return CycloScalar(m, std::move(c));
}

Json element_to_json(const GroupAlgebraElement& a) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    coeffs[std::to_string(i)] = scalar_to_json(a.coeffs()[i])["coeffs"];
  }
  return {{"conductor", a.conductor()}, {"coeffs", coeffs}};
}

GroupAlgebraElement element_from_json(const GroupTable& g, const Json& j) {
  const int m = get<int>(j, "conductor");
  GroupAlgebraElement a(g, m);
  const Json entries = get<Json>(j, "coeffs");
  for (const auto& [key, value] : entries.items()) {
    std::size_t idx = 0;
    try {
      idx = std::stoul(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InputError, "bad element index '" + key + "'");
    }
    if (idx >= g.order()) throw Error(ErrorCode::InputError, "element index out of range: " + key);
    a[static_cast<Element>(idx)] = scalar_from_json(Json{{"conductor", m}, {"coeffs", value}});
  }
  return a;
}

Json to_json(const IndicatorReport& r) {
  Json irreps = Json::array();
  for (const auto& i : r.irreps) {
    irreps.push_back({{"degree", i.degree},
                      {"F_alpha", i.f_alpha},
                      {"c_tau", i.c_tau},
                      {"nu", i.nu},
                      {"partner", i.partner},
                      {"parity", to_string(i.parity)},
                      {"factor", to_string(i.factor)},
                      {"factor_dim", i.factor_dim}});
  }
  Json pairing = Json::array();
  for (const auto& p : r.pairing) {
    pairing.push_back({{"members", p.members}, {"kind", p.kind == PairingClass::Kind::Osp ? "osp" : "gl"}});
  }
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(factor_to_json(f));
  return {{"irreps", irreps},
          {"pairing", pairing},
          {"factors", factors},
          {"I", r.involutions_plus},
          {"J", r.involutions_minus},
          {"dim_M", r.dim_M},
          {"dim_L_formula", r.dim_L_formula},
          {"center_dim", r.center_dim},
          {"fixed_classes_plus", r.fixed_classes_plus},
          {"fixed_classes_minus", r.fixed_classes_minus},
          {"swapped_class_pairs", r.swapped_class_pairs}};
}

IndicatorReport indicator_report_from_json(const Json& j) {
  IndicatorReport r;
  for (const auto& i : get<Json>(j, "irreps")) {
    IrrepIndicators x;
    x.degree = get<int>(i, "degree");
    x.f_alpha = get<int>(i, "F_alpha");
    x.c_tau = get<int>(i, "c_tau");
    x.nu = get<int>(i, "nu");
    x.partner = get<int>(i, "partner");
    x.parity = parity_from(get<std::string>(i, "parity"));
    x.factor = factor_kind_from(get<std::string>(i, "factor"));
    x.factor_dim = get<long>(i, "factor_dim");
    r.irreps.push_back(x);
  }
  for (const auto& p : get<Json>(j, "pairing")) {
    PairingClass pc;
    pc.members = get<std::vector<int>>(p, "members");
    const auto kind = get<std::string>(p, "kind");
    if (kind != "osp" && kind != "gl") throw Error(ErrorCode::InputError, "bad pairing kind '" + kind + "'");
    pc.kind = kind == "osp" ? PairingClass::Kind::Osp : PairingClass::Kind::Gl;
    r.pairing.push_back(pc);
  }
  for (const auto& f : get<Json>(j, "factors")) r.factors.push_back(factor_from_json(f));
  r.involutions_plus = get<long>(j, "I");
  r.involutions_minus = get<long>(j, "J");
  r.dim_M = get<long>(j, "dim_M");
  r.dim_L_formula = get<long>(j, "dim_L_formula");
  r.center_dim = get<long>(j, "center_dim");
  r.fixed_classes_plus = get<long>(j, "fixed_classes_plus");
  r.fixed_classes_minus = get<long>(j, "fixed_classes_minus");
  r.swapped_class_pairs = get<long>(j, "swapped_class_pairs");
  return r;
}

Json to_json(const LieReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(factor_to_json(f));
  Json j = {{"group", r.group},
            {"order", r.order},
            {"alpha", r.alpha},
            {"tau", r.tau},
            {"dim_L_rank", r.dim_L_rank},
            {"dim_L_formula", r.dim_L_formula},
            {"dim_M_predicted", r.dim_M_predicted},
            {"dim_L_trace", r.dim_L_trace},
            {"center_dim_exact", r.center_dim_exact},
            {"center_dim_predicted", r.center_dim_predicted},
            {"center_generators", r.center_generators},
            {"center_generators_predicted", r.center_generators_predicted},
            {"dims_ok", r.dims_ok},
            {"closure_ok", r.closure_ok},
            {"centrality_ok", r.centrality_ok},
            {"orthogonality_ok", r.orthogonality_ok},
            {"antiadjoint_ok", opt(r.antiadjoint_ok)},
            {"bookkeeping_ok", r.bookkeeping_ok},
            {"center_lemma_ok", r.center_lemma_ok},
            {"clifford_ok", opt(r.clifford_ok)},
            {"kawanaka_ok", opt(r.kawanaka_ok)},
            {"factors", factors},
            {"failures", r.failures},
            {"passed", r.passed()}};
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

LieReport lie_report_from_json(const Json& j) {
  LieReport r;
  r.group = get<std::string>(j, "group");
  r.order = get<std::size_t>(j, "order");
  r.alpha = get<std::string>(j, "alpha");
  r.tau = get<std::string>(j, "tau");
  r.dim_L_rank = get<long>(j, "dim_L_rank");
  r.dim_L_formula = get<long>(j, "dim_L_formula");
  r.dim_M_predicted = get<long>(j, "dim_M_predicted");
  r.dim_L_trace = get<long>(j, "dim_L_trace");
  r.center_dim_exact = get<long>(j, "center_dim_exact");
  r.center_dim_predicted = get<long>(j, "center_dim_predicted");
  r.center_generators = get<long>(j, "center_generators");
  r.center_generators_predicted = get<long>(j, "center_generators_predicted");
  r.dims_ok = get<bool>(j, "dims_ok");
  r.closure_ok = get<bool>(j, "closure_ok");
  r.centrality_ok = get<bool>(j, "centrality_ok");
  r.orthogonality_ok = get<bool>(j, "orthogonality_ok");
  r.antiadjoint_ok = get_opt_bool(j, "antiadjoint_ok");
  r.bookkeeping_ok = get<bool>(j, "bookkeeping_ok");
  r.center_lemma_ok = get<bool>(j, "center_lemma_ok");
  r.clifford_ok = get_opt_bool(j, "clifford_ok");
  r.kawanaka_ok = get_opt_bool(j, "kawanaka_ok");
  for (const auto& f : get<Json>(j, "factors")) r.factors.push_back(factor_from_json(f));
  r.failures = get<std::vector<std::string>>(j, "failures");
  if (j.contains("seconds")) r.seconds = get<double>(j, "seconds");
  return r;
}

Json to_json(const CharacterTable& ct, const GroupTable& g) {
  const auto& cd = ct.class_data;
  Json classes = Json::array();
  for (std::size_t c = 0; c < cd.count(); ++c) {
    classes.push_back({{"representative", cd.representative(static_cast<int>(c))},
                       {"size", cd.sizes[c]},
                       {"element_order", g.element_order(cd.representative(static_cast<int>(c)))}});
  }
  Json irreps = Json::array();
  for (std::size_t i = 0; i < ct.irrep_count(); ++i) {
    Json values = Json::array();
    for (const auto& v : ct.values[i]) {
      values.push_back({{"coeffs", scalar_to_json(v)["coeffs"]}, {"approx", cplx(v.to_complex())}});
    }
    irreps.push_back({{"degree", ct.degrees[i]}, {"values", values}});
  }
  return {{"group", g.name()},  {"order", ct.group_order}, {"conductor", ct.conductor},
          {"prime", ct.prime},  {"classes", classes},      {"irreps", irreps}};
}

Json to_json(const BesselExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coefficients) coeffs.push_back(cplx(c));
  return {{"N", e.N},
          {"omega", cplx(e.omega)},
          {"phi", cplx(e.phi)},
          {"z", cplx(e.z)},
          {"truncation", e.truncation},
          {"error_bound", e.error_bound},
          {"coefficients", coeffs}};
}

}  // namespace grouplie
