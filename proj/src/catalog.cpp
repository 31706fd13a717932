#include "grouplie/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "grouplie/error.hpp"

namespace grouplie {

namespace {

using Table = std::vector<std::vector<int>>;

std::vector<int> cycle(std::size_t degree, std::vector<int> points) {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    p[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  }
  return p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameters, what);
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  for (auto& p : parts) {
    if (p.size() >= 2 && p.front() == '(' && p.back() == ')') p = p.substr(1, p.size() - 2);
  }
  return parts;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadParameters, "expected an integer, got '" + s + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

GroupTable cyclic_group(int n) {
  require(n >= 1, "cyclic order must be >= 1");
  require(static_cast<std::size_t>(n) <= kDefaultOrderCap, "cyclic order exceeds cap");
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return GroupTable::from_mult_table(t, "Z/" + std::to_string(n));
}

GroupTable dihedral_group(int n) {
  require(n >= 1, "dihedral parameter must be >= 1");
  const int order = 2 * n;
  Table t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  // r^a s^b -> a + n b;  (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % n, b = x / n, c = y % n, d = y / n;
      const int ra = ((a + (b ? -c : c)) % n + n) % n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ra + n * ((b + d) % 2);
    }
  }
  return GroupTable::from_mult_table(t, "D" + std::to_string(order));
}

GroupTable symmetric_group(int n) {
  require(n >= 1 && n <= 6, "symmetric degree must be in 1..6");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    gens.push_back(cycle(deg, {0, 1}));
    std::vector<int> all(deg);
    std::iota(all.begin(), all.end(), 0);
    gens.push_back(cycle(deg, all));
  }
  if (gens.empty()) gens.push_back(std::vector<int>(deg, 0));
  return GroupTable::from_permutation_generators(gens, "S" + std::to_string(n));
}

GroupTable alternating_group(int n) {
  require(n >= 1 && n <= 6, "alternating degree must be in 1..6");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 2 < n; ++i) gens.push_back(cycle(deg, {i, i + 1, i + 2}));
  if (gens.empty()) gens.push_back(cycle(deg, {0}));
  return GroupTable::from_permutation_generators(gens, "A" + std::to_string(n));
}

GroupTable quaternion_group() {
  // index = 4 * sign + unit, units 1, i, j, k; unit products (sign, unit)
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
      const int s = (sx + sy + unit_sign[ux][uy]) % 2;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 4 * s + unit_prod[ux][uy];
    }
  }
  return GroupTable::from_mult_table(t, "Q8");
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  require(na * nb <= kDefaultOrderCap, "direct product exceeds order cap");
  Table t(na * nb, std::vector<int>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x) {
    for (std::size_t y = 0; y < na * nb; ++y) {
      const auto p = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const auto q = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x][y] = static_cast<int>(static_cast<std::size_t>(p) * nb + static_cast<std::size_t>(q));
    }
  }
  return GroupTable::from_mult_table(t, a.name() + "×" + b.name());
}

GroupTable semidirect_product(const GroupTable& g, const InvolutiveAutomorphism& tau) {
  const std::size_t n = g.order();
  require(2 * n <= kDefaultOrderCap, "semidirect product exceeds order cap");
  require(tau.map().size() == n, "automorphism does not match group");
  Table t(2 * n, std::vector<int>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x) {
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const auto gx = static_cast<Element>(x % n);
      const auto gy = static_cast<Element>(y % n);
      const std::size_t i = x / n, j = y / n;
      const Element twisted = i ? tau(gy) : gy;
      t[x][y] = static_cast<int>(static_cast<std::size_t>(g.mul(gx, twisted)) + n * ((i + j) % 2));
    }
  }
  return GroupTable::from_mult_table(t, g.name() + "⋊<" + tau.label() + ">");
}

GroupTable metacyclic_group(int n, int k, int r) {
  require(n >= 1 && k >= 1, "metacyclic parameters must be positive");
  require(static_cast<std::size_t>(n * k) <= kDefaultOrderCap, "metacyclic group exceeds order cap");
  long rk = 1;
  for (int i = 0; i < k; ++i) rk = rk * r % n;
  require(rk % n == 1 % n, "r^k must be 1 mod n");
  std::vector<long> rpow(static_cast<std::size_t>(k), 1);
  for (int i = 1; i < k; ++i) rpow[static_cast<std::size_t>(i)] = rpow[static_cast<std::size_t>(i - 1)] * r % n;
  const int order = n * k;
  Table t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  // (a, b) -> a + n b;  (a,b)(c,d) = (a + r^b c, b + d)
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % n, b = x / n, c = y % n, d = y / n;
      const long na = (a + rpow[static_cast<std::size_t>(b)] * c) % n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = static_cast<int>(na) + n * ((b + d) % k);
    }
  }
  return GroupTable::from_mult_table(t, "Z/" + std::to_string(n) + "⋊Z/" + std::to_string(k));
}

GroupTable catalog(const std::string& name, const std::vector<int>& params, const std::vector<GroupTable>& factors,
                   const InvolutiveAutomorphism* tau) {
  auto nparams = [&](std::size_t k) {
    if (params.size() != k) {
      throw Error(ErrorCode::BadParameters, name + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (name == "cyclic") {
    nparams(1);
    return cyclic_group(params[0]);
  }
  if (name == "dihedral") {
    nparams(1);
    return dihedral_group(params[0]);
  }
  if (name == "symmetric") {
    nparams(1);
    require(params[0] <= 5, "symmetric degree must be <= 5");
    return symmetric_group(params[0]);
  }
  if (name == "alternating") {
    nparams(1);
    require(params[0] <= 5, "alternating degree must be <= 5");
    return alternating_group(params[0]);
  }
  if (name == "quaternion8") {
    nparams(0);
    return quaternion_group();
  }
  if (name == "metacyclic") {
    nparams(3);
    return metacyclic_group(params[0], params[1], params[2]);
  }
  if (name == "elementary_abelian") {
    nparams(2);
    require(params[1] >= 1, "rank must be >= 1");
    GroupTable g = cyclic_group(params[0]);
    for (int i = 1; i < params[1]; ++i) g = direct_product(g, cyclic_group(params[0]));
    return g;
  }
  if (name == "direct_product") {
    if (factors.size() != 2) throw Error(ErrorCode::BadParameters, "direct_product needs two factors");
    return direct_product(factors[0], factors[1]);
  }
  if (name == "semidirect_product") {
    if (factors.size() != 1 || tau == nullptr) {
      throw Error(ErrorCode::BadParameters, "semidirect_product needs a group and an automorphism");
    }
    return semidirect_product(factors[0], *tau);
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog group '" + name + "'");
}

GroupTable parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (head == "file") return group_from_json(read_file(rest));
  if (head == "product" || head == "direct_product") {
    auto parts = split_top_level(rest);
    if (parts.size() != 2) throw Error(ErrorCode::BadParameters, "product needs exactly two factor specs");
    return catalog("direct_product", {}, {parse_group_spec(parts[0]), parse_group_spec(parts[1])});
  }
  if (head == "semidirect" || head == "semidirect_product") {
    auto parts = split_top_level(rest);
    if (parts.size() != 2) throw Error(ErrorCode::BadParameters, "semidirect needs <group>,<automorphism>");
    GroupTable base = parse_group_spec(parts[0]);
    const std::string& t = parts[1];
    InvolutiveAutomorphism tau = identity_automorphism(base);
    if (t == "inv") tau = inversion_automorphism(base);
    else if (t.rfind("auto:", 0) == 0) tau = automorphism_from_json(base, read_file(t.substr(5)));
    else if (t != "id") throw Error(ErrorCode::BadParameters, "automorphism must be id, inv or auto:<file>");
    return catalog("semidirect_product", {}, {base}, &tau);
  }
  std::vector<int> params;
  if (!rest.empty()) {
    for (const auto& p : split_top_level(rest)) params.push_back(parse_int(p));
  }
  return catalog(head, params);
}

GroupTable group_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InputError, std::string("invalid group JSON: ") + e.what());
  }
  try {
    const std::string name = j.value("name", "G");
    if (j.contains("table")) return GroupTable::from_mult_table(j.at("table").get<Table>(), name);
    if (j.contains("generators")) {
      return GroupTable::from_permutation_generators(j.at("generators").get<Table>(), name);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InputError, std::string("malformed group JSON: ") + e.what());
  }
  throw Error(ErrorCode::InputError, "group JSON needs a 'table' or 'generators' field");
}

InvolutiveAutomorphism automorphism_from_json(const GroupTable& g, const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return validate_automorphism(g, j.at("map").get<std::vector<Element>>(), j.value("label", "tau"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InputError, std::string("malformed automorphism JSON: ") + e.what());
  }
}

std::vector<InvolutiveAutomorphism> curated_automorphisms(const GroupTable& g) {
  std::vector<InvolutiveAutomorphism> out{identity_automorphism(g)};
  if (g.is_abelian()) {
    if (g.exponent() > 2) out.push_back(inversion_automorphism(g));
    return out;
  }
  for (std::size_t s = 1; s < g.order(); ++s) {
    if (g.element_order(static_cast<Element>(s)) == 2) {
      out.push_back(conjugation_automorphism(g, static_cast<Element>(s)));
      break;
    }
  }
  return out;
}

std::vector<CatalogItem> default_suite(std::size_t max_order) {
  std::vector<std::pair<std::size_t, CatalogItem>> all;
  for (int n = 2; n <= 24; ++n) all.push_back({n, {"cyclic:" + std::to_string(n), "cyclic"}});
  for (int n = 3; n <= 12; ++n) all.push_back({2 * n, {"dihedral:" + std::to_string(n), "dihedral"}});
  all.push_back({6, {"symmetric:3", "S3"}});
  all.push_back({24, {"symmetric:4", "S4"}});
  all.push_back({12, {"alternating:4", "A4"}});
  all.push_back({8, {"quaternion8", "Q8"}});
  all.push_back({4, {"elementary_abelian:2,2", "(Z/2)^2"}});
  all.push_back({8, {"product:cyclic:2,cyclic:4", "Z/2 x Z/4"}});
  all.push_back({8, {"elementary_abelian:2,3", "(Z/2)^3"}});
  all.push_back({9, {"elementary_abelian:3,2", "Z/3 x Z/3"}});
  all.push_back({21, {"metacyclic:7,3,2", "Z/7 ⋊ Z/3"}});
  all.push_back({60, {"alternating:5", "A5"}});
  all.push_back({120, {"symmetric:5", "S5"}});
  std::vector<CatalogItem> out;
  for (auto& [order, item] : all) {
    if (order <= max_order) out.push_back(std::move(item));
  }
  return out;
}

}  // namespace grouplie
