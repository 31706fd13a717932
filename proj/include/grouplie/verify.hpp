#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplie/char_table.hpp"
#include "grouplie/group.hpp"
#include "grouplie/indicators.hpp"

namespace grouplie {

struct LieReport {
  std::string group;
  std::size_t order = 0;
  std::string alpha;
  std::string tau;

  long dim_L_rank = 0;
  long dim_L_formula = 0;
  long dim_M_predicted = 0;
  long dim_L_trace = 0;
  /// Dimension of the center of L, by exact rank.
  long center_dim_exact = 0;
  /// Center of M: one per gl factor and one per so(2) factor.
  long center_dim_predicted = 0;
  /// Nonzero T_c - alpha(c) T_{tau(c)^-1}, one per orbit; predicted: number of gl pairs.
  long center_generators = 0;
  long center_generators_predicted = 0;

  bool dims_ok = false;
  bool closure_ok = false;
  bool centrality_ok = false;
  bool orthogonality_ok = false;
  /// rho(u)^T D + D rho(u) = 0; only checked for tau = id.
  std::optional<bool> antiadjoint_ok;
  bool bookkeeping_ok = false;
  bool center_lemma_ok = false;
  std::optional<bool> clifford_ok;
  std::optional<bool> kawanaka_ok;

  /// Factors of nonzero dimension, in pairing order.
  std::vector<Factor> factors;
  std::optional<double> seconds;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  friend bool operator==(const LieReport&, const LieReport&) = default;
};

/// Runs every check for one context and records each failure by name; never throws for a
/// failed check. ct must be the table of g.
LieReport verify_theorem(const GroupTable& g, const CharacterTable& ct, const LinearCharacter& alpha,
                         const InvolutiveAutomorphism& tau);
LieReport verify_theorem(const GroupTable& g, const LinearCharacter& alpha, const InvolutiveAutomorphism& tau);

/// Throws VerificationFailed naming the first failed check.
void require_passed(const LieReport& report);

/// Subgroup on the given elements (must contain the identity and be closed), relabelled in
/// ascending order of the parent indices.
GroupTable subgroup(const GroupTable& g, const std::vector<Element>& elements, std::string name);
std::vector<Element> kernel(const GroupTable& g, const LinearCharacter& alpha);

struct CliffordResult {
  bool ok = false;
  long dim_L_kernel = 0;
  long dim_intersection = 0;
};
/// L(Ker alpha), embedded in kG, against L(G) ∩ L_alpha(G).
CliffordResult verify_clifford(const GroupTable& g, const LinearCharacter& alpha);

struct KawanakaRow {
  int degree = 0;
  int f_epsilon = 0;
  CycloScalar f1_res{1};
  CycloScalar c_tau_res{1};
  /// Res chi = chi_+ + chi_- with chi_+ != chi_-.
  bool split = false;
  bool ok = false;
};
struct KawanakaResult {
  bool ok = false;
  std::size_t extension_order = 0;
  std::vector<KawanakaRow> rows;
};
/// Builds G ⋊ <tau>, epsilon with kernel G, and checks 2 F_eps(chi) = F_1(Res chi) - c_tau(Res chi)
/// for every irrep chi, plus c_tau(chi_+) = c_tau(chi_-) and F(chi_+) = F(chi_-) when Res chi splits.
KawanakaResult verify_kawanaka(const GroupTable& g, const InvolutiveAutomorphism& tau);

struct SuiteOptions {
  std::size_t max_order = 24;
  /// Empty: the default catalog up to max_order.
  std::vector<std::string> groups;
  /// "all" or a character label.
  std::string alpha = "all";
  /// "all" (curated list) or any selector resolve_tau accepts.
  std::string tau = "all";
  bool clifford = true;
  bool kawanaka = true;
  bool timing = false;
  std::uint64_t seed = 1;
};

/// Reports sorted by (group, alpha, tau). Errors inside a context become failures of that
/// context's report.
std::vector<LieReport> run_suite(const SuiteOptions& options);

/// Resolves an automorphism selector against g: "id", "inv", "conj<k>", "auto:<file>" or a file path.
InvolutiveAutomorphism resolve_tau(const GroupTable& g, const std::string& selector);
/// Resolves a character label against linear_characters(g); UsageError lists the available labels.
LinearCharacter resolve_alpha(const GroupTable& g, const std::string& label);

}  // namespace grouplie
