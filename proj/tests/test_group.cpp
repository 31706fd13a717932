#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "grouplie/catalog.hpp"
#include "grouplie/error.hpp"
#include "grouplie/group.hpp"

using namespace grouplie;

namespace {

std::map<int, int> order_census(const GroupTable& g) {
  std::map<int, int> c;
  for (std::size_t x = 0; x < g.order(); ++x) ++c[g.element_order(static_cast<Element>(x))];
  return c;
}

// brute-force orbits of conjugation, sorted sizes
std::vector<std::size_t> brute_class_sizes(const GroupTable& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> sizes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Element> orbit;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const auto e = static_cast<Element>(h);
      orbit.insert(g.mul(g.mul(e, static_cast<Element>(x)), g.inverse(e)));
    }
    for (Element y : orbit) seen[static_cast<std::size_t>(y)] = true;
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("tables") {
  const auto trivial = GroupTable::from_mult_table({{0}}, "1");
  CHECK(trivial.order() == 1);
  CHECK(trivial.exponent() == 1);
  const auto z2 = GroupTable::from_mult_table({{0, 1}, {1, 0}}, "Z/2");
  CHECK(z2.order() == 2);
  CHECK(z2.exponent() == 2);

  // identity stored at index 1 is moved to 0
  const auto moved = GroupTable::from_mult_table({{1, 0}, {0, 1}}, "Z/2'");
  CHECK(moved.mul(0, 1) == 1);
  CHECK(moved.mul(1, 1) == 0);

  auto t = symmetric_group(3).table();
  std::swap(t[1][2], t[1][3]);
  CHECK(code_of([&] { GroupTable::from_mult_table(t, "bad"); }) == ErrorCode::NotAssociative);
  CHECK(code_of([&] { GroupTable::from_mult_table({{1, 1}, {1, 1}}, "x"); }) == ErrorCode::NoIdentity);
  CHECK(code_of([&] { GroupTable::from_mult_table({{0, 1}, {1, 1}}, "x"); }) == ErrorCode::NoInverse);
  CHECK(code_of([&] { GroupTable::from_mult_table({{0, 5}, {1, 0}}, "x"); }) == ErrorCode::BadTable);
}

TEST_CASE("non-associative table names the triple") {
  // Latin square with identity 0 that is not associative (order 5 loop)
  const std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    GroupTable::from_mult_table(loop, "loop");
    FAIL("accepted a loop");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
    CHECK(std::string(e.what()).find('(') != std::string::npos);
  }
}

TEST_CASE("permutation generators") {
  CHECK(GroupTable::from_permutation_generators({{1, 0}}, "Z/2").order() == 2);
  const auto s3 = GroupTable::from_permutation_generators({{1, 0, 2}, {1, 2, 0}}, "S3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(GroupTable::from_permutation_generators({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, "S5").order() == 120);
  CHECK(code_of([] { GroupTable::from_permutation_generators({{0, 0}}, "x"); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { GroupTable::from_permutation_generators({{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, "S6", 100); }) ==
        ErrorCode::OrderCapExceeded);
}

TEST_CASE("catalog") {
  const auto z3 = catalog("cyclic", {3});
  CHECK(z3.order() == 3);
  CHECK(z3.exponent() == 3);
  const auto q8 = catalog("quaternion8", {});
  CHECK(order_census(q8)[2] == 1);
  const auto s3 = semidirect_product(z3, inversion_automorphism(z3));
  CHECK(s3.order() == 6);
  CHECK(order_census(s3)[2] == 3);
  CHECK(code_of([] { catalog("nosuch", {}); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { catalog("cyclic", {}); }) == ErrorCode::BadParameters);
  CHECK(parse_group_spec("product:(product:cyclic:2,cyclic:2),cyclic:2").order() == 8);
  CHECK(parse_group_spec("semidirect:cyclic:7,inv").order() == 14);
  CHECK(parse_group_spec("metacyclic:7,3,2").order() == 21);
  CHECK(parse_group_spec("dihedral:4").name() == "D8");
}

TEST_CASE("semidirect with identity is a direct product with Z/2") {
  for (const char* spec : {"cyclic:4", "symmetric:3", "quaternion8", "cyclic:6"}) {
    const auto g = parse_group_spec(spec);
    const auto sd = semidirect_product(g, identity_automorphism(g));
    const auto dp = direct_product(g, cyclic_group(2));
    CHECK(order_census(sd) == order_census(dp));
  }
}

TEST_CASE("group json") {
  const auto g = group_from_json(R"({"name": "S3", "generators": [[1,0,2],[1,2,0]]})");
  CHECK(g.order() == 6);
  const auto h = group_from_json(R"({"name": "Z/2", "table": [[0,1],[1,0]]})");
  CHECK(h.order() == 2);
  CHECK_THROWS_AS(group_from_json("{"), Error);
  const auto tau = automorphism_from_json(cyclic_group(5), R"({"label": "inv", "map": [0,4,3,2,1]})");
  CHECK(tau(1) == 4);
  CHECK(code_of([] { automorphism_from_json(cyclic_group(5), R"({"label": "x", "map": [0,2,4,1,3]})"); }) ==
        ErrorCode::NotInvolutive);
}

TEST_CASE("conjugacy classes") {
  const auto s3 = conjugacy_data(symmetric_group(3));
  CHECK(s3.sizes == std::vector<std::size_t>{1, 3, 2});
  auto q8 = conjugacy_data(quaternion_group()).sizes;
  std::sort(q8.begin(), q8.end());
  CHECK(q8 == std::vector<std::size_t>{1, 1, 2, 2, 2});
  const auto z12 = conjugacy_data(cyclic_group(12));
  CHECK(z12.count() == 12);
}

TEST_CASE("class invariants across the catalog") {
  std::mt19937 rng(2);
  for (const auto& item : default_suite(120)) {
    const auto g = parse_group_spec(item.spec);
    const auto cd = conjugacy_data(g);
    std::size_t total = 0;
    for (std::size_t c = 0; c < cd.count(); ++c) {
      total += cd.sizes[c];
      CHECK(g.order() % cd.sizes[c] == 0);
      CHECK(static_cast<std::size_t>(cd.inverse_class[static_cast<std::size_t>(cd.inverse_class[c])]) == c);
    }
    CHECK(total == g.order());
    auto sizes = cd.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == brute_class_sizes(g));
    CHECK(cd.classes[0] == std::vector<Element>{0});
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
    for (int t = 0; t < 100; ++t) {
      const Element x = pick(rng), h = pick(rng);
      const Element y = g.mul(g.mul(h, x), g.inverse(h));
      CHECK(cd.class_of[static_cast<std::size_t>(x)] == cd.class_of[static_cast<std::size_t>(y)]);
      CHECK(cd.class_of[static_cast<std::size_t>(g.mul(x, x))] == cd.class_of[static_cast<std::size_t>(g.mul(y, y))]);
      CHECK(cd.square_class[static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(x)])] ==
            cd.class_of[static_cast<std::size_t>(g.mul(x, x))]);
    }
    CHECK(g.order() % static_cast<std::size_t>(g.exponent()) == 0);
    for (std::size_t x = 0; x < g.order(); ++x) CHECK(g.power(static_cast<Element>(x), g.exponent()) == 0);
  }
}

TEST_CASE("linear characters") {
  const auto s3 = linear_characters(symmetric_group(3));
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].label() == "trivial");
  CHECK(s3[1].label() == "sign");
  CHECK(linear_characters(cyclic_group(4)).size() == 4);
  CHECK(linear_characters(quaternion_group()).size() == 4);
  CHECK(linear_characters(alternating_group(5)).size() == 1);
}

TEST_CASE("linear characters form a group of class functions") {
  for (const char* spec : {"cyclic:6", "dihedral:4", "quaternion8", "elementary_abelian:2,3", "alternating:4",
                           "product:cyclic:2,cyclic:4", "metacyclic:7,3,2"}) {
    const auto g = parse_group_spec(spec);
    const auto cd = conjugacy_data(g);
    const auto chars = linear_characters(g);
    std::set<std::vector<int>> seen;
    for (const auto& a : chars) {
      check_linear_character(g, a);
      CHECK(a.is_one_at(0));
      for (std::size_t x = 0; x < g.order(); ++x) {
        const auto rep = cd.representative(cd.class_of[x]);
        CHECK(a.value(static_cast<Element>(x)) == a.value(rep));
      }
      seen.insert(a.exponents());
    }
    CHECK(seen.size() == chars.size());
    for (const auto& a : chars) {
      for (const auto& b : chars) {
        std::vector<int> prod(g.order());
        for (std::size_t x = 0; x < g.order(); ++x) prod[x] = (a.exponents()[x] + b.exponents()[x]) % a.conductor();
        CHECK(seen.count(prod) == 1);
      }
    }
  }
  const auto bad = LinearCharacter(3, {0, 1, 1}, "bad");
  CHECK(code_of([&] { check_linear_character(cyclic_group(3), bad); }) == ErrorCode::NotHomomorphism);
}

TEST_CASE("automorphisms") {
  const auto s3 = symmetric_group(3);
  CHECK(identity_automorphism(s3).is_identity());
  const auto z5 = cyclic_group(5);
  const auto inv = inversion_automorphism(z5);
  for (int x = 0; x < 5; ++x) CHECK(inv(inv(x)) == x);
  CHECK(code_of([&] { inversion_automorphism(s3); }) == ErrorCode::NotHomomorphism);
  CHECK(code_of([&] { validate_automorphism(z5, {0, 1}, "short"); }) == ErrorCode::BadParameters);
  const auto conj = conjugation_automorphism(s3, 1);
  CHECK(conj(conj(2)) == 2);
  for (const auto& item : default_suite(24)) {
    const auto g = parse_group_spec(item.spec);
    for (const auto& t : curated_automorphisms(g)) validate_automorphism(g, t.map(), t.label());
  }
}
