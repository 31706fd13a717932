#include <doctest.h>

#include <complex>

#include "grouplie/catalog.hpp"
#include "grouplie/error.hpp"
#include "grouplie/indicators.hpp"

using namespace grouplie;

namespace {

struct Ctx {
  GroupTable g;
  CharacterTable ct;
  std::vector<LinearCharacter> chars;
  explicit Ctx(const std::string& spec) : g(parse_group_spec(spec)), ct(character_table(g)), chars(linear_characters(g)) {}
  const LinearCharacter& alpha(const std::string& label) const {
    for (const auto& a : chars)
      if (a.label() == label) return a;
    throw std::runtime_error("no character " + label);
  }
};

// (1/|G|) sum_g conj(alpha(g)) chi(g tau(g)) in floating point, element by element
std::vector<double> numeric_nu(const Ctx& c, const LinearCharacter& alpha, const InvolutiveAutomorphism& tau) {
  std::vector<double> out;
  for (std::size_t i = 0; i < c.ct.irrep_count(); ++i) {
    std::complex<double> s = 0.0;
    for (std::size_t x = 0; x < c.g.order(); ++x) {
      const auto e = static_cast<Element>(x);
      const Element y = c.g.mul(e, tau(e));
      s += std::conj(alpha.value(e).to_complex()) *
           c.ct.values[i][static_cast<std::size_t>(c.ct.class_data.class_of[static_cast<std::size_t>(y)])].to_complex();
    }
    s /= static_cast<double>(c.g.order());
    CHECK(std::abs(s.imag()) < 1e-9);
    out.push_back(s.real());
  }
  return out;
}

}  // namespace

TEST_CASE("weighted indicators on S3 and Q8") {
  const Ctx s3("symmetric:3");
  CHECK(weighted_fs(s3.ct, s3.alpha("trivial")) == std::vector<int>{1, 1, 1});
  const auto fs = weighted_fs(s3.ct, s3.alpha("sign"));
  CHECK(fs[0] == 0);
  CHECK(fs[2] == -1);
  const Ctx q8("quaternion8");
  CHECK(weighted_fs(q8.ct, q8.alpha("trivial")) == std::vector<int>{1, 1, 1, 1, -1});
}

TEST_CASE("kawanaka indicator") {
  const Ctx s3("symmetric:3");
  CHECK(kawanaka(s3.ct, s3.g, identity_automorphism(s3.g)) == weighted_fs(s3.ct, s3.alpha("trivial")));
  CHECK(kawanaka(s3.ct, s3.g, conjugation_automorphism(s3.g, 1)) == std::vector<int>{1, 1, 1});
  const Ctx z3("cyclic:3");
  CHECK(kawanaka(z3.ct, z3.g, inversion_automorphism(z3.g)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("twisted indicator specializes and matches numeric sums") {
  for (const auto& item : default_suite(24)) {
    const Ctx c(item.spec);
    const auto id = identity_automorphism(c.g);
    CHECK(twisted_indicator(c.ct, c.g, c.chars[0], id) == weighted_fs(c.ct, c.chars[0]));
    for (const auto& tau : curated_automorphisms(c.g)) {
      CHECK(twisted_indicator(c.ct, c.g, c.chars[0], tau) == kawanaka(c.ct, c.g, tau));
      for (const auto& alpha : c.chars) {
        if (!compatible(alpha, tau)) {
          CHECK_THROWS_AS(twisted_indicator(c.ct, c.g, alpha, tau), Error);
          continue;
        }
        const auto nu = twisted_indicator(c.ct, c.g, alpha, tau);
        const auto num = numeric_nu(c, alpha, tau);
        for (std::size_t i = 0; i < nu.size(); ++i) CHECK(std::abs(nu[i] - num[i]) < 1e-9);
        if (tau.is_identity()) CHECK(nu == weighted_fs(c.ct, alpha));
      }
    }
  }
}

TEST_CASE("pairing examples") {
  const Ctx z3("cyclic:3");
  const auto p = pairing(z3.ct, z3.g, z3.chars[0], identity_automorphism(z3.g));
  REQUIRE(p.size() == 2);
  CHECK(p[0].members == std::vector<int>{0});
  CHECK(p[0].kind == PairingClass::Kind::Osp);
  CHECK(p[1].members == std::vector<int>{1, 2});
  CHECK(p[1].kind == PairingClass::Kind::Gl);

  const Ctx s3("symmetric:3");
  const auto ps = pairing(s3.ct, s3.g, s3.alpha("sign"), identity_automorphism(s3.g));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].members == std::vector<int>{0, 1});
  CHECK(ps[1].members == std::vector<int>{2});

  const Ctx q8("quaternion8");
  CHECK(pairing(q8.ct, q8.g, q8.chars[0], identity_automorphism(q8.g)).size() == 5);
}

TEST_CASE("predicted decomposition") {
  const Ctx s3("symmetric:3");
  const auto id = identity_automorphism(s3.g);
  auto r = indicator_report(s3.ct, s3.g, s3.alpha("trivial"), id);
  CHECK(render_factors(r.factors) == "so(1)² ⊕ so(2)");
  CHECK(r.dim_M == 1);
  CHECK(r.center_dim == 0);
  r = indicator_report(s3.ct, s3.g, s3.alpha("sign"), id);
  CHECK(render_factors(r.factors) == "gl(1) ⊕ sp(2)");
  CHECK(r.dim_M == 4);
  CHECK(r.center_dim == 1);
  const Ctx q8("quaternion8");
  r = indicator_report(q8.ct, q8.g, q8.chars[0], identity_automorphism(q8.g));
  CHECK(render_factors(r.factors) == "so(1)⁴ ⊕ sp(2)");
  CHECK(r.dim_M == 3);
  CHECK(render_factors({}) == "0");
}

TEST_CASE("involution counts") {
  const Ctx s3("symmetric:3");
  const auto id = identity_automorphism(s3.g);
  auto c = involution_counts(s3.g, s3.alpha("trivial"), id);
  CHECK(c.plus == 4);
  CHECK(c.minus == 0);
  c = involution_counts(s3.g, s3.alpha("sign"), id);
  CHECK(c.plus == 1);
  CHECK(c.minus == 3);

  const Ctx z4("cyclic:4");
  // x -> i
  const LinearCharacter chi(4, {0, 1, 2, 3}, "i");
  c = involution_counts(z4.g, chi, identity_automorphism(z4.g));
  CHECK(c.plus == 1);
  CHECK(c.minus == 1);
  CHECK_THROWS_AS(involution_counts(z4.g, chi, inversion_automorphism(z4.g)), Error);
}

TEST_CASE("indicator identities on every suite context") {
  for (const auto& item : default_suite(24)) {
    const Ctx c(item.spec);
    for (const auto& tau : curated_automorphisms(c.g)) {
      for (const auto& alpha : c.chars) {
        if (!compatible(alpha, tau)) continue;
        CAPTURE(item.spec);
        CAPTURE(alpha.label());
        CAPTURE(tau.label());
        const auto r = indicator_report(c.ct, c.g, alpha, tau);
        long weighted = 0;
        std::size_t self = 0;
        for (std::size_t i = 0; i < r.irreps.size(); ++i) {
          const auto& x = r.irreps[i];
          CHECK(x.nu >= -1);
          CHECK(x.nu <= 1);
          weighted += static_cast<long>(x.nu) * x.degree;
          CHECK(r.irreps[static_cast<std::size_t>(x.partner)].partner == static_cast<int>(i));
          CHECK((x.nu == 0) == (x.parity == Parity::Odd));
          if (x.parity == Parity::Even) ++self;
        }
        CHECK(weighted == r.involutions_plus - r.involutions_minus);
        CHECK(static_cast<long>(c.g.order()) - 2 * r.dim_M == weighted);
        CHECK(r.dim_M == r.dim_L_formula);
        // class side: f+ - f- = #self-paired irreps, and swapped + f- = #gl pairs
        CHECK(r.fixed_classes_plus - r.fixed_classes_minus == static_cast<long>(self));
        CHECK(r.swapped_class_pairs + r.fixed_classes_minus == r.center_dim);
        if (tau.is_identity() && alpha.is_trivial()) {
          long inv = 0;
          for (std::size_t x = 0; x < c.g.order(); ++x) inv += c.g.mul(static_cast<Element>(x), static_cast<Element>(x)) == 0;
          CHECK(weighted == inv);
        }
      }
    }
  }
}

TEST_CASE("literal class-count lemma fails on S3 with sign") {
  // #{c : alpha(c) = 1, c = c^-1} = #{V : V = partner(V)} is off by the alpha = -1 classes
  const Ctx s3("symmetric:3");
  const auto r = indicator_report(s3.ct, s3.g, s3.alpha("sign"), identity_automorphism(s3.g));
  long self = 0;
  for (const auto& x : r.irreps) self += x.parity == Parity::Even;
  CHECK(r.fixed_classes_plus == 2);
  CHECK(self == 1);
  CHECK(r.fixed_classes_plus - r.fixed_classes_minus == self);
}

TEST_CASE("indicator value guard") {
  CHECK(indicator_value(CycloScalar(3, Rational(-1)), "x") == -1);
  CHECK_THROWS_AS(indicator_value(CycloScalar(3, Rational(2)), "x"), Error);
  CHECK_THROWS_AS(indicator_value(CycloScalar::root_of_unity(3, 1), "x"), Error);
}
