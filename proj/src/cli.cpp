#include "grouplie/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "grouplie/bessel.hpp"
#include "grouplie/catalog.hpp"
#include "grouplie/error.hpp"
#include "grouplie/report_io.hpp"
#include "grouplie/verify.hpp"

namespace grouplie {

namespace {

void parse_complex(const std::string& s, double& re, double& im) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    re = std::stod(s.substr(0, comma), &used);
    if (used != s.substr(0, comma).size()) throw std::invalid_argument(s);
    im = 0.0;
    if (comma != std::string::npos) {
      const std::string tail = s.substr(comma + 1);
      im = std::stod(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(s);
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError, "--z expects re,im; got '" + s + "'");
  }
}

std::uint64_t parse_seed(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError, what + " must be a nonnegative integer, got '" + s + "'");
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::VerificationFailed:
    case ErrorCode::CentralityFailed:
    case ErrorCode::LiftInconsistent:
    case ErrorCode::IndicatorOutOfRange:
    case ErrorCode::PartnerNotFound:
    case ErrorCode::PrimeSearchFailed:
      return 2;
    default:
      return 1;
  }
}

std::string lie_name(const LieReport& r) {
  const bool a = r.alpha != "trivial";
  const bool t = r.tau != "id";
  std::string sub;
  if (a && t) sub = "_{" + r.alpha + "," + r.tau + "}";
  else if (t) sub = "_{trivial," + r.tau + "}";
  else if (a) sub = "_" + r.alpha;
  return "L" + sub + "(" + r.group + ")";
}

std::string yes(bool b) { return b ? "ok" : "FAIL"; }
std::string yes(const std::optional<bool>& b) { return b ? yes(*b) : "-"; }

void write_lie_text(std::ostream& os, const LieReport& r) {
  os << (r.passed() ? "PASS " : "FAIL ") << r.group << " alpha=" << r.alpha << " tau=" << r.tau << "  dim "
     << r.dim_L_rank << " = " << r.dim_L_formula << " = " << r.dim_M_predicted << " = " << r.dim_L_trace
     << "  center " << r.center_dim_exact << "/" << r.center_dim_predicted << "  generators " << r.center_generators
     << "/" << r.center_generators_predicted << "  closure " << yes(r.closure_ok) << " orth " << yes(r.orthogonality_ok)
     << " anti " << yes(r.antiadjoint_ok) << " books " << yes(r.bookkeeping_ok) << " lemma "
     << yes(r.center_lemma_ok) << " clifford " << yes(r.clifford_ok) << " kawanaka " << yes(r.kawanaka_ok);
  if (r.seconds) os << "  " << std::fixed << std::setprecision(3) << *r.seconds << "s" << std::defaultfloat;
  for (const auto& f : r.failures) os << "  [" << f << "]";
  os << "\n";
}

int do_analyze(const RunConfig& cfg, std::ostream& os) {
  const GroupTable g = parse_group_spec(cfg.group);
  CharTableOptions cto;
  cto.seed = cfg.seed;
  cto.prime_index = cfg.prime_index;
  const CharacterTable ct = character_table(g, cto);
  const LinearCharacter alpha = resolve_alpha(g, cfg.alpha);
  const InvolutiveAutomorphism tau = resolve_tau(g, cfg.tau);
  if (!compatible(alpha, tau)) {
    throw Error(ErrorCode::IncompatiblePair, "alpha ∘ tau != alpha for alpha=" + alpha.label() + ", tau=" + tau.label());
  }
  const IndicatorReport ind = indicator_report(ct, g, alpha, tau);
  LieReport lie = verify_theorem(g, ct, alpha, tau);
  if (!tau.is_identity()) lie.kawanaka_ok = verify_kawanaka(g, tau).ok;
  else if (!alpha.is_trivial()) lie.clifford_ok = verify_clifford(g, alpha).ok;
  if (lie.clifford_ok && !*lie.clifford_ok) lie.failures.push_back("clifford");
  if (lie.kawanaka_ok && !*lie.kawanaka_ok) lie.failures.push_back("kawanaka");

  const std::string summary = lie_name(lie) + " = " + render_factors(ind.factors) + ", dim " +
                              std::to_string(lie.dim_L_rank) + ", center " + std::to_string(lie.center_dim_exact);
  if (cfg.format == "json") {
    Json doc = {{"summary", summary}, {"indicators", to_json(ind)}, {"lie", to_json(lie)}};
    os << doc.dump(2) << "\n";
  } else {
    os << summary << "\n";
    os << "irrep  degree  F_alpha  c_tau  nu  partner  factor\n";
    for (std::size_t i = 0; i < ind.irreps.size(); ++i) {
      const auto& x = ind.irreps[i];
      os << std::setw(5) << i << std::setw(8) << x.degree << std::setw(9) << x.f_alpha << std::setw(7) << x.c_tau
         << std::setw(4) << x.nu << std::setw(9) << x.partner << "  " << to_string(x.factor) << "\n";
    }
    os << "I = " << ind.involutions_plus << ", J = " << ind.involutions_minus << ", dim M = " << ind.dim_M
       << ", census = " << ind.dim_L_formula << "\n";
    write_lie_text(os, lie);
  }
  return lie.passed() ? 0 : 2;
}

int do_verify(const RunConfig& cfg, std::ostream& os) {
  SuiteOptions so;
  so.max_order = cfg.max_order;
  if (!cfg.group.empty()) so.groups.push_back(cfg.group);
  so.alpha = cfg.alpha;
  so.tau = cfg.tau;
  so.timing = cfg.timing;
  so.seed = cfg.seed;
  const auto reports = run_suite(so);
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const LieReport& r) { return !r.passed(); });
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    os << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) write_lie_text(os, r);
    os << reports.size() << " contexts, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 2;
}

int do_table(const RunConfig& cfg, std::ostream& os) {
  const GroupTable g = parse_group_spec(cfg.group);
  CharTableOptions cto;
  cto.seed = cfg.seed;
  cto.prime_index = cfg.prime_index;
  const CharacterTable ct = character_table(g, cto);
  if (cfg.format == "json") {
    os << to_json(ct, g).dump(2) << "\n";
    return 0;
  }
  const auto& cd = ct.class_data;
  os << g.name() << ", order " << g.order() << ", " << cd.count() << " classes, values in Q(z), z = exp(2 pi i/"
     << ct.conductor << "), prime " << ct.prime << "\n";
  os << "class sizes:";
  for (std::size_t c = 0; c < cd.count(); ++c) os << " " << cd.sizes[c];
  os << "\nelement orders:";
  for (std::size_t c = 0; c < cd.count(); ++c) os << " " << g.element_order(cd.representative(static_cast<int>(c)));
  os << "\n";
  for (std::size_t i = 0; i < ct.irrep_count(); ++i) {
    os << "chi" << i << ":";
    for (const auto& v : ct.values[i]) os << "  " << v.to_string();
    os << "\n";
  }
  return 0;
}

int do_bessel(const RunConfig& cfg, std::ostream& os) {
  const long den = cfg.omega_den > 0 ? cfg.omega_den : cfg.n;
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(cfg.omega_k) / static_cast<double>(den));
  const Complex z(cfg.z_re, cfg.z_im);
  const int m = cfg.truncation > 0 ? cfg.truncation : default_truncation(cfg.n, z);
  const BesselExpansion e = exp_cyclic(cfg.n, omega, z, m, cfg.tol);
  const auto oracle = exp_matrix_oracle(cfg.n, omega, z);
  const double dev = max_deviation(e.coefficients, oracle);
  const bool ok = dev <= cfg.tol;
  if (cfg.format == "json") {
    Json doc = to_json(e);
    Json orc = Json::array();
    for (const auto& c : oracle) orc.push_back(Json::array({c.real(), c.imag()}));
    doc["oracle"] = orc;
    doc["deviation"] = dev;
    doc["tolerance"] = cfg.tol;
    doc["passed"] = ok;
    os << doc.dump(2) << "\n";
  } else {
    os << std::setprecision(15);
    os << "N = " << e.N << ", omega = " << e.omega << ", z = " << e.z << ", M = " << e.truncation
       << ", error bound = " << e.error_bound << "\n";
    os << " r  bessel                                      oracle\n";
    for (int r = 0; r < e.N; ++r) {
      os << std::setw(2) << r << "  " << std::setw(42) << std::left << e.coefficients[static_cast<std::size_t>(r)]
         << "  " << oracle[static_cast<std::size_t>(r)] << std::right << "\n";
    }
    os << "max deviation " << dev << (ok ? " (ok)" : " (exceeds tolerance)") << "\n";
  }
  return ok ? 0 : 2;
}

int do_catalog(const RunConfig& cfg, std::ostream& os) {
  const auto items = default_suite(cfg.max_order);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& it : items) {
      arr.push_back({{"spec", it.spec}, {"order", parse_group_spec(it.spec).order()}, {"description", it.description}});
    }
    os << arr.dump(2) << "\n";
  } else {
    for (const auto& it : items) {
      os << std::left << std::setw(28) << it.spec << std::right << std::setw(5) << parse_group_spec(it.spec).order()
         << "  " << it.description << "\n";
    }
  }
  return 0;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Lie algebras of twisted skew elements in finite group algebras", "grouplie"};
  app.require_subcommand(1);

  std::string seed_str;
  std::string z_str;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "write the document to this path");
  };
  auto seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_str, "seed for the character table splitter (GROUPLIE_SEED overrides)");
    sub->add_option("--prime-index", cfg.prime_index, "use the k-th admissible prime")->check(CLI::NonNegativeNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "indicators and Lie checks for one (G, alpha, tau)");
  analyze->add_option("--group", cfg.group, "group spec")->required();
  analyze->add_option("--alpha", cfg.alpha, "linear character label");
  analyze->add_option("--tau", cfg.tau, "id, inv, conj<k>, auto:<file> or <file>");
  common(analyze);
  seeded(analyze);

  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  verify->add_option("--group", cfg.group, "restrict to one group spec");
  verify->add_option("--alpha", cfg.alpha, "label or all");
  verify->add_option("--tau", cfg.tau, "id, inv, conj<k>, auto:<file>, <file> or all");
  verify->add_option("--max-order", cfg.max_order, "largest group order")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", cfg.timing, "record per-context wall time");
  common(verify);
  seeded(verify);

  auto* table = app.add_subcommand("table", "exact character table");
  table->add_option("--group", cfg.group, "group spec")->required();
  common(table);
  seeded(table);

  auto* bessel = app.add_subcommand("bessel", "folded Bessel series against the matrix exponential");
  bessel->add_option("--n", cfg.n, "cyclic order N")->required()->check(CLI::Range(2, 4096));
  bessel->add_option("--omega-k", cfg.omega_k, "omega = exp(2 pi i k / den)")->required();
  bessel->add_option("--omega-den", cfg.omega_den, "denominator for omega (default N)")->check(CLI::PositiveNumber);
  bessel->add_option("--z", z_str, "re,im")->required();
  bessel->add_option("--tol", cfg.tol, "tolerance for the error bound and the deviation")->check(CLI::PositiveNumber);
  bessel->add_option("--truncation", cfg.truncation, "max |m| in the folded sum")->check(CLI::PositiveNumber);
  common(bessel);

  auto* list = app.add_subcommand("catalog-list", "groups of the default suite");
  list->add_option("--max-order", cfg.max_order, "largest group order")->check(CLI::PositiveNumber);
  common(list);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    cfg.help = app.help();
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::UsageError, e.what());
  }

  if (analyze->parsed()) cfg.command = Command::Analyze;
  else if (verify->parsed()) cfg.command = Command::Verify;
  else if (table->parsed()) cfg.command = Command::Table;
  else if (bessel->parsed()) cfg.command = Command::Bessel;
  else cfg.command = Command::CatalogList;

  if (cfg.alpha.empty()) cfg.alpha = cfg.command == Command::Verify ? "all" : "trivial";
  if (cfg.tau.empty()) cfg.tau = cfg.command == Command::Verify ? "all" : "id";
  if (!seed_str.empty()) cfg.seed = parse_seed(seed_str, "--seed");
  if (const char* env = std::getenv("GROUPLIE_SEED"); env != nullptr && *env != '\0') {
    cfg.seed = parse_seed(env, "GROUPLIE_SEED");
  }
  if (cfg.command == Command::Bessel) parse_complex(z_str, cfg.z_re, cfg.z_im);

  // resolve selectors early so a bad label is a usage error
  if (cfg.command == Command::Analyze) {
    GroupTable g = parse_group_spec(cfg.group);
    resolve_alpha(g, cfg.alpha);
    resolve_tau(g, cfg.tau);
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.help) {
    out << *cfg.help;
    return 0;
  }
  std::ostringstream buf;
  int code = 0;
  switch (cfg.command) {
    case Command::Analyze: code = do_analyze(cfg, buf); break;
    case Command::Verify: code = do_verify(cfg, buf); break;
    case Command::Table: code = do_table(cfg, buf); break;
    case Command::Bessel: code = do_bessel(cfg, buf); break;
    case Command::CatalogList: code = do_catalog(cfg, buf); break;
  }
  if (cfg.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "grouplie: cannot write " << cfg.out << "\n";
      return 1;
    }
    f << buf.str();
  }
  return code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    return run(parse_args(args), out, err);
  } catch (const Error& e) {
    err << "grouplie: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "grouplie: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace grouplie
