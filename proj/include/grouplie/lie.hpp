#pragma once

#include <vector>

#include "grouplie/cyclotomic.hpp"
#include "grouplie/group.hpp"
#include "grouplie/linalg.hpp"

namespace grouplie {

/// Element of Q(zeta_m) G as a dense coefficient vector indexed by group elements.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(const GroupTable& g, int conductor);
  GroupAlgebraElement(const GroupTable& g, CycloVector coeffs);
  static GroupAlgebraElement delta(const GroupTable& g, int conductor, Element x);
  /// T_c, the sum of the members of conjugacy class c.
  static GroupAlgebraElement class_sum(const GroupTable& g, int conductor, const ConjugacyData& cd, int c);

  const GroupTable& group() const { return *group_; }
  int conductor() const { return m_; }
  const CycloVector& coeffs() const { return c_; }
  const CycloScalar& operator[](Element x) const { return c_[static_cast<std::size_t>(x)]; }
  CycloScalar& operator[](Element x) { return c_[static_cast<std::size_t>(x)]; }

  bool is_zero() const { return is_zero_vector(c_); }
  /// The trace t(a) = coefficient of the identity.
  const CycloScalar& trace() const { return c_[0]; }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const CycloScalar& s);
  GroupAlgebraElement& operator*=(const Rational& s);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.group_ == b.group_ && a.c_ == b.c_;
  }

 private:
  void check_same(const GroupAlgebraElement& o) const;

  const GroupTable* group_;
  int m_;
  CycloVector c_;
};

inline GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
inline GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }

/// (a b)[z] = sum_{xy = z} a[x] b[y].
GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
/// ab - ba.
GroupAlgebraElement bracket(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Validated (alpha, tau) pair: alpha ∘ tau = alpha, so S(g) = alpha(g) tau(g)^-1 is an
/// involutive antiautomorphism of the group algebra.
class TwistContext {
 public:
  TwistContext(const GroupTable& g, LinearCharacter alpha, InvolutiveAutomorphism tau);

  const GroupTable& group() const { return *group_; }
  const LinearCharacter& alpha() const { return alpha_; }
  const InvolutiveAutomorphism& tau() const { return tau_; }
  int conductor() const { return alpha_.conductor(); }
  /// tau(g)^-1, the element S sends g to (up to the scalar alpha(g)).
  Element s_image(Element g) const { return group_->inverse(tau_(g)); }

 private:
  const GroupTable* group_;
  LinearCharacter alpha_;
  InvolutiveAutomorphism tau_;
};

/// delta_g -> alpha(g) delta_{tau(g)^-1}, extended linearly.
GroupAlgebraElement apply_S(const GroupAlgebraElement& a, const TwistContext& ctx);
/// (a - S(a)) / 2, the projector onto L_{alpha,tau}(G).
GroupAlgebraElement project(const GroupAlgebraElement& a, const TwistContext& ctx);
/// Trace of the projector as a #G x #G matrix.
Rational projector_trace(const TwistContext& ctx);

struct LieBasis {
  std::vector<GroupAlgebraElement> vectors;
  /// vectors[i] = g - alpha(g) tau(g)^-1 for g = generators[i]
  std::vector<Element> generators;
  std::size_t dim = 0;
};

/// One spanning vector per orbit of g -> tau(g)^-1, skipping zero vectors; dim by exact rank.
LieBasis build_lie_basis(const TwistContext& ctx);

/// T_c - alpha(c) T_{tau(c)^-1}, one per orbit of c -> tau(c)^-1, skipping the zero ones.
/// Each element is checked to commute with every basis vector (CentralityFailed otherwise).
std::vector<GroupAlgebraElement> center_basis(const TwistContext& ctx, const ConjugacyData& cd, const LieBasis& basis);

/// p(x) = (1/|G|) sum_g g x g^-1.
GroupAlgebraElement class_projection(const GroupAlgebraElement& a);

/// rank of span{[g, h]} over all pairs; equals |G| - #classes.
std::size_t derived_algebra_dim(const GroupTable& g, int conductor);

/// Exact dimension of the center of the Lie algebra spanned by basis.
std::size_t lie_center_dim(const LieBasis& basis);

/// Row matrix of the basis coefficient vectors.
CycloMatrix coefficient_matrix(const std::vector<GroupAlgebraElement>& vectors, const GroupTable& g, int conductor);

}  // namespace grouplie
