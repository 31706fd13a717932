#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grouplie/cyclotomic.hpp"

namespace grouplie {

/// Dense element index; the identity is always 0.
using Element = int;

inline constexpr std::size_t kDefaultOrderCap = 1024;
inline constexpr std::size_t kExhaustiveAssociativityCap = 256;

/// A finite group given by its full multiplication table.
class GroupTable {
 public:
  /// Validates the group axioms. The identity is relabelled to index 0 by swapping it with
  /// whatever element held that index.
  static GroupTable from_mult_table(const std::vector<std::vector<int>>& table, std::string name);
  /// Breadth-first closure of the generated permutation group; product is composition
  /// (g*h)(x) = g(h(x)).
  static GroupTable from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                                std::string name, std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const { return n_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return mult_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  Element inverse(Element g) const { return inv_[static_cast<std::size_t>(g)]; }
  Element power(Element g, long k) const;
  int element_order(Element g) const { return orders_[static_cast<std::size_t>(g)]; }
  /// lcm of element orders.
  int exponent() const { return exponent_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const;
  std::vector<std::vector<int>> table() const;

 private:
  GroupTable() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::string name_;
};

struct ConjugacyData {
  /// Class members sorted ascending; classes ordered by smallest member, so class 0 = {e}.
  std::vector<std::vector<Element>> classes;
  std::vector<int> class_of;
  std::vector<int> inverse_class;
  std::vector<int> square_class;
  std::vector<std::size_t> sizes;

  std::size_t count() const { return classes.size(); }
  Element representative(int c) const { return classes[static_cast<std::size_t>(c)].front(); }
};

ConjugacyData conjugacy_data(const GroupTable& g);

/// Class of g^k for g in class c.
int power_class(const GroupTable& g, const ConjugacyData& cd, int c, long k);

/// Homomorphism G -> mu_m stored as exponents: value(g) = zeta_m^{exponent(g)}, m = exp(G).
class LinearCharacter {
 public:
  LinearCharacter(int conductor, std::vector<int> exponents, std::string label);

  int conductor() const { return m_; }
  int exponent(Element g) const { return exps_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& exponents() const { return exps_; }
  CycloScalar value(Element g) const { return CycloScalar::root_of_unity(m_, exps_[static_cast<std::size_t>(g)]); }
  /// value(g) == 1 / == -1 without building scalars.
  bool is_one_at(Element g) const { return exps_[static_cast<std::size_t>(g)] == 0; }
  bool is_minus_one_at(Element g) const { return 2 * exps_[static_cast<std::size_t>(g)] == m_; }
  bool is_trivial() const;
  /// All values are +-1.
  bool is_real() const;
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const LinearCharacter& a, const LinearCharacter& b) {
    return a.m_ == b.m_ && a.exps_ == b.exps_;
  }

 private:
  int m_;
  std::vector<int> exps_;
  std::string label_;
};

/// Throws NotHomomorphism if alpha is not multiplicative on g.
void check_linear_character(const GroupTable& g, const LinearCharacter& alpha);

/// Commutator subgroup [G, G] as a sorted element list.
std::vector<Element> commutator_subgroup(const GroupTable& g);

/// Every linear character, via the character group of G/[G,G]. Sorted by exponent vector
/// (trivial first); labelled "trivial", then "sign" when exactly one nontrivial real
/// character exists, otherwise "lin<k>".
std::vector<LinearCharacter> linear_characters(const GroupTable& g);

class InvolutiveAutomorphism {
 public:
  InvolutiveAutomorphism(std::vector<Element> map, std::string label)
      : map_(std::move(map)), label_(std::move(label)) {}

  Element operator()(Element g) const { return map_[static_cast<std::size_t>(g)]; }
  const std::vector<Element>& map() const { return map_; }
  const std::string& label() const { return label_; }
  bool is_identity() const;

 private:
  std::vector<Element> map_;
  std::string label_;
};

/// Checks length, bijectivity, multiplicativity and tau∘tau = id.
InvolutiveAutomorphism validate_automorphism(const GroupTable& g, const std::vector<Element>& map,
                                             std::string label);

InvolutiveAutomorphism identity_automorphism(const GroupTable& g);
/// g -> g^{-1}; NotHomomorphism unless g is abelian.
InvolutiveAutomorphism inversion_automorphism(const GroupTable& g);
/// g -> s g s^{-1} for an element s of order <= 2.
InvolutiveAutomorphism conjugation_automorphism(const GroupTable& g, Element s);

/// The alpha ∘ tau = alpha compatibility needed for S(g) = alpha(g) tau(g)^{-1} to be involutive.
bool compatible(const LinearCharacter& alpha, const InvolutiveAutomorphism& tau);

}  // namespace grouplie
