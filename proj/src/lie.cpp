#include "grouplie/lie.hpp"

#include "grouplie/error.hpp"

namespace grouplie {

GroupAlgebraElement::GroupAlgebraElement(const GroupTable& g, int conductor)
    : group_(&g), m_(conductor), c_(g.order(), CycloScalar(conductor)) {}

GroupAlgebraElement::GroupAlgebraElement(const GroupTable& g, CycloVector coeffs)
    : group_(&g), m_(coeffs.empty() ? 1 : coeffs.front().conductor()), c_(std::move(coeffs)) {
  if (c_.size() != g.order()) throw Error(ErrorCode::DimensionMismatch, "coefficient vector length != |G|");
}

GroupAlgebraElement GroupAlgebraElement::delta(const GroupTable& g, int conductor, Element x) {
  GroupAlgebraElement e(g, conductor);
  e[x] = CycloScalar::one(conductor);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::class_sum(const GroupTable& g, int conductor, const ConjugacyData& cd, int c) {
  GroupAlgebraElement e(g, conductor);
  for (Element x : cd.classes[static_cast<std::size_t>(c)]) e[x] = CycloScalar::one(conductor);
  return e;
}

void GroupAlgebraElement::check_same(const GroupAlgebraElement& o) const {
  if (group_ != o.group_) throw Error(ErrorCode::GroupMismatch, group_->name() + " vs " + o.group_->name());
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const CycloScalar& s) {
  for (auto& x : c_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& s) {
  for (auto& x : c_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

namespace {

std::vector<Element> support(const GroupAlgebraElement& a) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (!a.coeffs()[i].is_zero()) out.push_back(static_cast<Element>(i));
  }
  return out;
}

}  // namespace

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (&a.group() != &b.group()) throw Error(ErrorCode::GroupMismatch, a.group().name() + " vs " + b.group().name());
  const GroupTable& g = a.group();
  GroupAlgebraElement out(g, a.conductor());
  const auto sa = support(a);
  const auto sb = support(b);
  for (Element x : sa) {
    for (Element y : sb) out[g.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

GroupAlgebraElement bracket(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return convolve(a, b) - convolve(b, a);
}

TwistContext::TwistContext(const GroupTable& g, LinearCharacter alpha, InvolutiveAutomorphism tau)
    : group_(&g), alpha_(std::move(alpha)), tau_(std::move(tau)) {
  if (alpha_.exponents().size() != g.order() || tau_.map().size() != g.order()) {
    throw Error(ErrorCode::GroupMismatch, "alpha or tau defined on a different group");
  }
  if (!compatible(alpha_, tau_)) {
    throw Error(ErrorCode::IncompatiblePair, "alpha ∘ tau != alpha for alpha=" + alpha_.label() + ", tau=" + tau_.label());
  }
}

GroupAlgebraElement apply_S(const GroupAlgebraElement& a, const TwistContext& ctx) {
  if (&a.group() != &ctx.group()) throw Error(ErrorCode::GroupMismatch, "element and context over different groups");
  GroupAlgebraElement out(a.group(), a.conductor());
  for (Element x : support(a)) out[ctx.s_image(x)] += a[x] * ctx.alpha().value(x);
  return out;
}

GroupAlgebraElement project(const GroupAlgebraElement& a, const TwistContext& ctx) {
  GroupAlgebraElement out = a - apply_S(a, ctx);
  out *= Rational(1, 2);
  return out;
}

Rational projector_trace(const TwistContext& ctx) {
  const GroupTable& g = ctx.group();
  Rational tr(0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    const auto img = project(GroupAlgebraElement::delta(g, ctx.conductor(), gx), ctx);
    const auto diag = img[gx].as_rational();
    if (!diag) throw Error(ErrorCode::VerificationFailed, "projector diagonal entry is not rational");
    tr += *diag;
  }
  return tr;
}

CycloMatrix coefficient_matrix(const std::vector<GroupAlgebraElement>& vectors, const GroupTable& g, int conductor) {
  std::vector<CycloVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(v.coeffs());
  return CycloMatrix::from_rows(conductor, g.order(), rows);
}

LieBasis build_lie_basis(const TwistContext& ctx) {
  const GroupTable& g = ctx.group();
  const int m = ctx.conductor();
  LieBasis basis;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    const Element s = ctx.s_image(gx);
    if (s < gx) continue;
    if (s == gx && ctx.alpha().is_one_at(gx)) continue;
    GroupAlgebraElement v = GroupAlgebraElement::delta(g, m, gx);
    v[s] -= ctx.alpha().value(gx);
    basis.vectors.push_back(std::move(v));
    basis.generators.push_back(gx);
  }
  basis.dim = rank(coefficient_matrix(basis.vectors, g, m));
  return basis;
}

std::vector<GroupAlgebraElement> center_basis(const TwistContext& ctx, const ConjugacyData& cd, const LieBasis& basis) {
  const GroupTable& g = ctx.group();
  const int m = ctx.conductor();
  std::vector<GroupAlgebraElement> out;
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const Element rep = cd.representative(static_cast<int>(c));
    const auto s = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(ctx.s_image(rep))]);
    if (s < c) continue;
    GroupAlgebraElement z = GroupAlgebraElement::class_sum(g, m, cd, static_cast<int>(c));
    GroupAlgebraElement partner = GroupAlgebraElement::class_sum(g, m, cd, static_cast<int>(s));
    partner *= ctx.alpha().value(rep);
    z -= partner;
    if (z.is_zero()) continue;
    if (apply_S(z, ctx) != GroupAlgebraElement(g, m) - z) {
      throw Error(ErrorCode::CentralityFailed, "center generator for class " + std::to_string(c) + " is not in L");
    }
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
      if (!bracket(z, basis.vectors[i]).is_zero()) {
        throw Error(ErrorCode::CentralityFailed, "generator for class " + std::to_string(c) +
                                                     " does not commute with basis vector " + std::to_string(i));
      }
    }
    out.push_back(std::move(z));
  }
  return out;
}

GroupAlgebraElement class_projection(const GroupAlgebraElement& a) {
  const GroupTable& g = a.group();
  GroupAlgebraElement out(g, a.conductor());
  const auto sa = support(a);
  for (std::size_t h = 0; h < g.order(); ++h) {
    const auto gh = static_cast<Element>(h);
    for (Element x : sa) out[g.mul(g.mul(gh, x), g.inverse(gh))] += a[x];
  }
  out *= Rational(1, static_cast<unsigned long>(g.order()));
  return out;
}

std::size_t derived_algebra_dim(const GroupTable& g, int conductor) {
  RowSpace space(conductor, g.order());
  std::vector<bool> seen(g.order() * g.order(), false);
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const Element ab = g.mul(static_cast<Element>(a), static_cast<Element>(b));
      const Element ba = g.mul(static_cast<Element>(b), static_cast<Element>(a));
      if (ab == ba) continue;
      const std::size_t key = static_cast<std::size_t>(std::min(ab, ba)) * g.order() + static_cast<std::size_t>(std::max(ab, ba));
      if (seen[key]) continue;
      seen[key] = true;
      CycloVector v(g.order(), CycloScalar(conductor));
      v[static_cast<std::size_t>(ab)] = CycloScalar::one(conductor);
      v[static_cast<std::size_t>(ba)] = -CycloScalar::one(conductor);
      space.insert(v);
    }
  }
  return space.dimension();
}

std::size_t lie_center_dim(const LieBasis& basis) {
  const std::size_t d = basis.vectors.size();
  if (d == 0) return 0;
  if (basis.dim != d) throw Error(ErrorCode::DimensionMismatch, "lie basis vectors are not independent");
  const GroupTable& g = basis.vectors.front().group();
  const int m = basis.vectors.front().conductor();
  const std::size_t n = g.order();
  // row j: ([b_j, b_0], ..., [b_j, b_{d-1}]); center = left kernel
  CycloMatrix mat(m, d, d * n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const GroupAlgebraElement br = bracket(basis.vectors[j], basis.vectors[i]);
      for (std::size_t z = 0; z < n; ++z) {
        const auto& v = br.coeffs()[z];
        if (v.is_zero()) continue;
        mat(j, i * n + z) = v;
        mat(i, j * n + z) = -v;
      }
    }
  }
  return d - rank(mat);
}

}  // namespace grouplie
