#include <doctest.h>

#include <random>

#include "grouplie/catalog.hpp"
#include "grouplie/char_table.hpp"
#include "grouplie/error.hpp"
#include "grouplie/lie.hpp"
#include "grouplie/verify.hpp"
#include "support.hpp"

using namespace grouplie;

namespace {

GroupAlgebraElement random_element(const GroupTable& g, int m, std::mt19937& rng) {
  GroupAlgebraElement a(g, m);
  std::uniform_int_distribution<int> keep(0, 2);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (keep(rng) == 0) a[static_cast<Element>(x)] = testing::random_scalar(rng, m, 2);
  }
  return a;
}

LinearCharacter find_alpha(const GroupTable& g, const std::string& label) { return resolve_alpha(g, label); }

// all |G| vectors g - alpha(g) tau(g)^-1, no orbit de-duplication, ranked in floating point
std::size_t numeric_dim(const TwistContext& ctx) {
  const auto& g = ctx.group();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(g.order()), static_cast<Eigen::Index>(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) += 1.0;
    m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(ctx.s_image(e))) -= ctx.alpha().value(e).to_complex();
  }
  return testing::numeric_rank(m);
}

std::vector<Element> transpositions(const GroupTable& g) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<Element>(x)) == 2) out.push_back(static_cast<Element>(x));
  return out;
}

}  // namespace

TEST_CASE("convolution") {
  const auto s3 = symmetric_group(3);
  std::mt19937 rng(4);
  const auto a = random_element(s3, 3, rng);
  CHECK(convolve(GroupAlgebraElement::delta(s3, 3, 0), a) == a);
  for (Element g = 0; g < 6; ++g)
    for (Element h = 0; h < 6; ++h)
      CHECK(convolve(GroupAlgebraElement::delta(s3, 1, g), GroupAlgebraElement::delta(s3, 1, h)) ==
            GroupAlgebraElement::delta(s3, 1, s3.mul(g, h)));

  Element t = 0;
  for (Element x = 0; x < 6; ++x)
    if (s3.element_order(x) == 3) t = x;
  auto u = GroupAlgebraElement::delta(s3, 1, t) - GroupAlgebraElement::delta(s3, 1, s3.inverse(t));
  auto expect = GroupAlgebraElement::delta(s3, 1, s3.mul(t, t)) + GroupAlgebraElement::delta(s3, 1, t);
  expect[0] = CycloScalar(1, Rational(-2));
  CHECK(convolve(u, u) == expect);

  const auto other = cyclic_group(6);
  CHECK_THROWS_AS(convolve(a, GroupAlgebraElement(other, 3)), Error);
}

TEST_CASE("brackets") {
  const auto s3 = symmetric_group(3);
  std::mt19937 rng(8);
  const auto a = random_element(s3, 3, rng);
  CHECK(bracket(a, a).is_zero());
  const auto z6 = cyclic_group(6);
  CHECK(bracket(random_element(z6, 6, rng), random_element(z6, 6, rng)).is_zero());

  const auto tr = transpositions(s3);
  REQUIRE(tr.size() == 3);
  const Element ab = s3.mul(tr[0], tr[1]);
  const Element ba = s3.mul(tr[1], tr[0]);
  CHECK(s3.element_order(ab) == 3);
  CHECK(ba == s3.inverse(ab));
  const auto br = bracket(GroupAlgebraElement::delta(s3, 1, tr[0]), GroupAlgebraElement::delta(s3, 1, tr[1]));
  CHECK(br == GroupAlgebraElement::delta(s3, 1, ab) - GroupAlgebraElement::delta(s3, 1, ba));
}

TEST_CASE("S is an involutive antiautomorphism preserving the trace") {
  std::mt19937 rng(12);
  for (const char* spec : {"symmetric:3", "quaternion8", "dihedral:4", "cyclic:5", "alternating:4"}) {
    const auto g = parse_group_spec(spec);
    for (const auto& tau : curated_automorphisms(g)) {
      for (const auto& alpha : linear_characters(g)) {
        if (!compatible(alpha, tau)) continue;
        const TwistContext ctx(g, alpha, tau);
        const int m = ctx.conductor();
        CHECK(apply_S(GroupAlgebraElement::delta(g, m, 0), ctx) == GroupAlgebraElement::delta(g, m, 0));
        for (int t = 0; t < 10; ++t) {
          const auto a = random_element(g, m, rng);
          const auto b = random_element(g, m, rng);
          CHECK(apply_S(apply_S(a, ctx), ctx) == a);
          CHECK(apply_S(convolve(a, b), ctx) == convolve(apply_S(b, ctx), apply_S(a, ctx)));
          CHECK(apply_S(a, ctx).trace() == a.trace());
          const auto p = project(a, ctx);
          CHECK(project(p, ctx) == p);
          CHECK(apply_S(p, ctx) == GroupAlgebraElement(g, m) - p);
          CHECK(project(a + apply_S(a, ctx), ctx).is_zero());
        }
      }
    }
  }
}

TEST_CASE("S on S3 with sign") {
  const auto s3 = symmetric_group(3);
  const TwistContext ctx(s3, find_alpha(s3, "sign"), identity_automorphism(s3));
  const Element t = transpositions(s3).front();
  const int m = ctx.conductor();
  CHECK(apply_S(GroupAlgebraElement::delta(s3, m, t), ctx) == GroupAlgebraElement(s3, m) - GroupAlgebraElement::delta(s3, m, t));
  CHECK_THROWS_AS(TwistContext(s3, find_alpha(s3, "sign"), InvolutiveAutomorphism({0, 2, 1, 3, 4, 5}, "bogus")), Error);
}

TEST_CASE("lie basis dimensions") {
  const auto v4 = parse_group_spec("elementary_abelian:2,2");
  CHECK(build_lie_basis(TwistContext(v4, linear_characters(v4)[0], identity_automorphism(v4))).dim == 0);
  const auto s3 = symmetric_group(3);
  CHECK(build_lie_basis(TwistContext(s3, find_alpha(s3, "trivial"), identity_automorphism(s3))).dim == 1);
  CHECK(build_lie_basis(TwistContext(s3, find_alpha(s3, "sign"), identity_automorphism(s3))).dim == 4);
  const auto q8 = quaternion_group();
  CHECK(build_lie_basis(TwistContext(q8, linear_characters(q8)[0], identity_automorphism(q8))).dim == 3);
}

TEST_CASE("exact rank, float rank, census and projector trace agree") {
  for (const auto& item : default_suite(24)) {
    const auto g = parse_group_spec(item.spec);
    for (const auto& tau : curated_automorphisms(g)) {
      for (const auto& alpha : linear_characters(g)) {
        if (!compatible(alpha, tau)) continue;
        const TwistContext ctx(g, alpha, tau);
        const auto b = build_lie_basis(ctx);
        CHECK(b.dim == b.vectors.size());
        CHECK(b.dim == numeric_dim(ctx));
        CHECK(static_cast<long>(b.dim) == lie_dimension_census(g, alpha, tau));
        CHECK(projector_trace(ctx) == Rational(static_cast<long>(b.dim)));
        for (const auto& v : b.vectors) CHECK(apply_S(v, ctx) == GroupAlgebraElement(g, ctx.conductor()) - v);
      }
    }
  }
}

TEST_CASE("center generators") {
  const auto s3 = symmetric_group(3);
  const auto cd = conjugacy_data(s3);
  {
    const TwistContext ctx(s3, find_alpha(s3, "sign"), identity_automorphism(s3));
    const auto z = center_basis(ctx, cd, build_lie_basis(ctx));
    REQUIRE(z.size() == 1);
    auto expect = GroupAlgebraElement::class_sum(s3, ctx.conductor(), cd, cd.class_of[static_cast<std::size_t>(transpositions(s3).front())]);
    expect *= Rational(2);
    CHECK(z[0] == expect);
  }
  {
    const auto z3 = cyclic_group(3);
    const auto cd3 = conjugacy_data(z3);
    const TwistContext ctx(z3, linear_characters(z3)[0], identity_automorphism(z3));
    const auto z = center_basis(ctx, cd3, build_lie_basis(ctx));
    REQUIRE(z.size() == 1);
    CHECK(z[0] == GroupAlgebraElement::delta(z3, 3, 1) - GroupAlgebraElement::delta(z3, 3, 2));
  }
  {
    const auto q8 = quaternion_group();
    const TwistContext ctx(q8, linear_characters(q8)[0], identity_automorphism(q8));
    CHECK(center_basis(ctx, conjugacy_data(q8), build_lie_basis(ctx)).empty());
  }
}

TEST_CASE("exact Lie center against float rank") {
  for (const char* spec : {"symmetric:3", "quaternion8", "dihedral:4", "alternating:4", "cyclic:6", "symmetric:4"}) {
    const auto g = parse_group_spec(spec);
    for (const auto& alpha : linear_characters(g)) {
      const TwistContext ctx(g, alpha, identity_automorphism(g));
      const auto b = build_lie_basis(ctx);
      const std::size_t d = b.vectors.size();
      const std::size_t n = g.order();
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d * n));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const auto br = bracket(b.vectors[i], b.vectors[j]);
          for (std::size_t z = 0; z < n; ++z)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j * n + z)) = br.coeffs()[z].to_complex();
        }
      CHECK(lie_center_dim(b) == d - testing::numeric_rank(m));
    }
  }
}

TEST_CASE("class projection") {
  const auto s3 = symmetric_group(3);
  const auto cd = conjugacy_data(s3);
  std::mt19937 rng(6);
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const auto t = GroupAlgebraElement::class_sum(s3, 1, cd, static_cast<int>(c));
    CHECK(class_projection(t) == t);
  }
  for (Element x = 0; x < 6; ++x) {
    const int c = cd.class_of[static_cast<std::size_t>(x)];
    auto expect = GroupAlgebraElement::class_sum(s3, 1, cd, c);
    expect *= Rational(1, static_cast<long>(cd.sizes[static_cast<std::size_t>(c)]));
    CHECK(class_projection(GroupAlgebraElement::delta(s3, 1, x)) == expect);
    const Element y = s3.mul(s3.mul(1, x), s3.inverse(1));
    CHECK(class_projection(GroupAlgebraElement::delta(s3, 1, x) - GroupAlgebraElement::delta(s3, 1, y)).is_zero());
  }
  const auto a = random_element(s3, 3, rng);
  CHECK(class_projection(class_projection(a)) == class_projection(a));
}

TEST_CASE("derived algebra") {
  CHECK(derived_algebra_dim(cyclic_group(8), 1) == 0);
  CHECK(derived_algebra_dim(symmetric_group(3), 1) == 3);
  CHECK(derived_algebra_dim(quaternion_group(), 1) == 3);
  for (const char* spec : {"alternating:4", "dihedral:5", "symmetric:4", "metacyclic:7,3,2"}) {
    const auto g = parse_group_spec(spec);
    const auto ct = character_table(g);
    long expect = 0;
    for (int d : ct.degrees) expect += static_cast<long>(d) * d - 1;
    CHECK(static_cast<long>(derived_algebra_dim(g, 1)) == expect);
    CHECK(derived_algebra_dim(g, 1) == g.order() - ct.irrep_count());
  }
}

TEST_CASE("subgroups give Lie subalgebras") {
  struct Pair {
    const char* spec;
    int sub_order;
  };
  for (const Pair& p : {Pair{"symmetric:3", 3}, Pair{"quaternion8", 4}}) {
    const auto g = parse_group_spec(p.spec);
    // cyclic subgroup generated by an element of the given order
    Element gen = 0;
    for (Element x = 0; x < static_cast<Element>(g.order()); ++x)
      if (g.element_order(x) == p.sub_order) gen = x;
    std::vector<Element> elems;
    for (int k = 0; k < p.sub_order; ++k) elems.push_back(g.power(gen, k));
    const auto h = subgroup(g, elems, "H");
    std::sort(elems.begin(), elems.end());
    const auto lh = build_lie_basis(TwistContext(h, linear_characters(h)[0], identity_automorphism(h)));
    const auto lg = build_lie_basis(TwistContext(g, linear_characters(g)[0], identity_automorphism(g)));
    RowSpace space(g.exponent(), g.order());
    for (const auto& v : lg.vectors) space.insert(v.coeffs());
    std::vector<GroupAlgebraElement> embedded;
    for (const auto& v : lh.vectors) {
      GroupAlgebraElement w(g, g.exponent());
      for (std::size_t i = 0; i < h.order(); ++i) w[elems[i]] = v.coeffs()[i].embed(g.exponent());
      CHECK(space.contains(w.coeffs()));
      embedded.push_back(w);
    }
    CHECK(rank(coefficient_matrix(embedded, g, g.exponent())) == lh.dim);
    RowSpace sub(g.exponent(), g.order());
    for (const auto& v : embedded) sub.insert(v.coeffs());
    for (const auto& a : embedded)
      for (const auto& b : embedded) CHECK(sub.contains(bracket(a, b).coeffs()));
  }
}
