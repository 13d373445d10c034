#include <doctest.h>

#include "darbouxlie/golden.hpp"
#include "darbouxlie/grassmann.hpp"
#include "support/oracles.hpp"

using namespace dlie;
using dlie::testing::blade;

TEST_SUITE("grassmann") {

TEST_CASE("blade basis and signs") {
  CHECK(blade_basis(4, 2).size() == 6);
  std::vector<std::string> names;
  for (Blade b : blade_basis(4, 2)) names.push_back(blade_name(b));
  CHECK(names == std::vector<std::string>{"e12", "e13", "e14", "e23", "e24", "e34"});
  CHECK(wedge_sign(blade("e2"), blade("e1")) == -1);
  CHECK(wedge_sign(blade("e13"), blade("e2")) == -1);
  CHECK(wedge_sign(blade("e12"), blade("e34")) == 1);
  CHECK(wedge_sign(blade("e12"), blade("e2")) == 0);
  CHECK(binomial(8, 3) == 56);
  CHECK(blade_position(4, blade("e24")) == 4);
}

TEST_CASE("wedge is graded commutative") {
  auto a = parse_multivector("e1 + 2*e3", 4), b = parse_multivector("e2 - e4", 4);
  CHECK(wedge(a, b) == wedge(b, a).scaled(Rational(-1)));
  CHECK(wedge(a, a).is_zero());
  auto c = parse_multivector("e12", 4);
  CHECK(wedge(c, a) == wedge(a, c));
}

TEST_CASE("parse and print multivectors") {
  auto w = parse_multivector("e21 + 2*e34", 4);
  CHECK(to_string(w) == "-e12 + 2*e34");
  CHECK(to_string(parse_multivector("alpha*e13", 4, {{"alpha", Rational(3)}})) == "3*e13");
  CHECK_THROWS(parse_multivector("e12 + e3", 4));
  CHECK(bivector_coords(parse_multivector("e14 + e23", 4)) == Vec{0, 0, 1, 1, 0, 0});
}

TEST_CASE("Schouten bracket on vectors is the Lie bracket") {
  auto g = catalog("s1");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto s = schouten_blades(g, Blade(1) << i, Blade(1) << j);
      CHECK(s == MultiVector::vector(g.bracket_basis(i, j)));
    }
}

TEST_CASE("s1 mixed brackets") {
  // [e4, e23] = [e4,e2]^e3 + e2^[e4,e3] = e13 + e23
  auto g = catalog("s1");
  CHECK(to_string(schouten_blades(g, blade("e4"), blade("e23"))) == "e13 + e23");
  CHECK(schouten_blades(g, blade("e1"), blade("e234")).is_zero());
}

TEST_CASE("invariants of s1") {
  auto g = catalog("s1");
  auto i2 = invariants(g, 2);
  REQUIRE(i2.size() == 1);
  CHECK(testing::same_span(i2, testing::blades(4, {"e12"})));
  CHECK(invariants(g, 3).empty());
  CHECK(invariants(g, 4).empty());  // the algebra is not unimodular
}

TEST_CASE("Leibniz lift agrees with the action on wedges") {
  auto g = catalog("s6");
  auto v = Vec{1, 2, -1, 3};
  auto d = g.ad(v);
  auto w = parse_multivector("e12 + 3*e24 - e34", 4);
  CHECK(apply(lift_derivation(d, 2), w) == ad_action(g, v, w));
}

TEST_CASE("group lift is multiplicative") {
  auto t = RatMatrix::from_rows({{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 3, 1}, {0, 0, 0, 1}}, 4);
  auto u = RatMatrix::from_rows({{2, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}, 4);
  for (int m = 1; m <= 4; ++m) CHECK(lift_group(t * u, m) == lift_group(t, m) * lift_group(u, m));
  CHECK(lift_group(t, 4)(0, 0) == 3);  // determinant
}

TEST_CASE("dimension mismatch is reported") {
  auto g = catalog("s1");
  MultiVector a(3, 1);
  a.add(1, 1);
  CHECK_THROWS_AS(schouten(g, a, a), DimensionMismatch);
  CHECK_THROWS_AS(MultiVector::from_coords(4, 2, Vec{1, 2}), DimensionMismatch);
}

}  // TEST_SUITE
