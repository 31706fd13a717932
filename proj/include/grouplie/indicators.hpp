#pragma once

#include <string>
#include <vector>

#include "grouplie/char_table.hpp"
#include "grouplie/group.hpp"

namespace grouplie {

enum class Parity { Even, Odd };
enum class FactorKind { Orthogonal, Symplectic, Paired };

std::string to_string(Parity p);
std::string to_string(FactorKind k);

struct PairingClass {
  enum class Kind { Osp, Gl };
  std::vector<int> members;  // one or two irrep indices, ascending
  Kind kind = Kind::Osp;

  friend bool operator==(const PairingClass&, const PairingClass&) = default;
};

struct IrrepIndicators {
  int degree = 0;
  int f_alpha = 0;
  int c_tau = 0;
  /// (1/|G|) sum_g conj(alpha(g)) chi(g tau(g)); equals f_alpha for tau = 1 and c_tau for alpha = 1.
  int nu = 0;
  int partner = 0;
  Parity parity = Parity::Even;
  FactorKind factor = FactorKind::Orthogonal;
  /// Dimension contributed by this irrep's pairing class (shared by both members of a pair).
  long factor_dim = 0;

  friend bool operator==(const IrrepIndicators&, const IrrepIndicators&) = default;
};

struct Factor {
  std::string label;  // so(n), sp(n) or gl(n)
  long dim = 0;
  std::vector<int> members;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct IndicatorReport {
  std::vector<IrrepIndicators> irreps;
  std::vector<PairingClass> pairing;
  std::vector<Factor> factors;
  long involutions_plus = 0;   // I: tau(g) = g^-1, alpha(g) = 1
  long involutions_minus = 0;  // J: tau(g) = g^-1, alpha(g) = -1
  long dim_M = 0;
  long dim_L_formula = 0;
  long center_dim = 0;
  /// Classes fixed by c -> tau(c)^-1, split by alpha(c) = +1 / -1.
  long fixed_classes_plus = 0;
  long fixed_classes_minus = 0;
  /// Orbits of size 2 under c -> tau(c)^-1.
  long swapped_class_pairs = 0;

  friend bool operator==(const IndicatorReport&, const IndicatorReport&) = default;
};

/// Exact value of a sum known to be an integer in {-1, 0, 1}; IndicatorOutOfRange otherwise.
int indicator_value(const CycloScalar& exact, const std::string& what);

/// F_alpha(V) = (1/|G|) sum_c |c| chi_V(c^2) conj(alpha(c)), per irrep.
std::vector<int> weighted_fs(const CharacterTable& ct, const LinearCharacter& alpha);
/// c_tau(chi) = (1/|G|) sum_g chi(g tau(g)), per irrep.
std::vector<int> kawanaka(const CharacterTable& ct, const GroupTable& g, const InvolutiveAutomorphism& tau);
/// nu(chi) = (1/|G|) sum_g conj(alpha(g)) chi(g tau(g)), per irrep.
std::vector<int> twisted_indicator(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                                   const InvolutiveAutomorphism& tau);

/// Exact sums behind the three indicators, for callers that need the unrounded values.
std::vector<CycloScalar> twisted_indicator_exact(const CharacterTable& ct, const GroupTable& g,
                                                 const LinearCharacter& alpha, const InvolutiveAutomorphism& tau);

/// tau acting on classes: c -> class of tau(rep c).
std::vector<int> class_map(const GroupTable& g, const ConjugacyData& cd, const InvolutiveAutomorphism& tau);

/// partner[i] = index of the irrep with character alpha * conj(chi_i) ∘ tau.
std::vector<int> partners(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                          const InvolutiveAutomorphism& tau);
std::vector<PairingClass> pairing(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                                  const InvolutiveAutomorphism& tau);

struct InvolutionCounts {
  long plus = 0;
  long minus = 0;
};
InvolutionCounts involution_counts(const GroupTable& g, const LinearCharacter& alpha, const InvolutiveAutomorphism& tau);

/// (1/2)#{g : tau(g) != g^-1} + #{g : tau(g) = g^-1, alpha(g) != 1}.
long lie_dimension_census(const GroupTable& g, const LinearCharacter& alpha, const InvolutiveAutomorphism& tau);

/// Full report: indicators, pairing, factor list and predicted dimensions.
IndicatorReport indicator_report(const CharacterTable& ct, const GroupTable& g, const LinearCharacter& alpha,
                                 const InvolutiveAutomorphism& tau);

/// e.g. "gl(1) ⊕ sp(2)" or "so(1)⁴ ⊕ sp(2)"; "0" for an empty algebra.
std::string render_factors(const std::vector<Factor>& factors);

}  // namespace grouplie
