#include <doctest.h>

#include <algorithm>

#include "darbouxlie/classify.hpp"
#include "darbouxlie/darboux.hpp"
#include "darbouxlie/expr.hpp"
#include "darbouxlie/golden.hpp"
#include "support/oracles.hpp"

using namespace dlie;

TEST_SUITE("darboux") {

TEST_CASE("bricks") {
  for (auto& [f, p, want] : testing::brick_cases()) {
    CAPTURE(f);
    auto fields = fundamental_fields(catalog(f, p), 2);
    std::vector<Poly> got, exp;
    for (auto& b : find_bricks(fields)) {
      got.push_back(b.poly);
      CHECK(b.eigenvalues.size() == fields.size());
      // X f = lambda f for every field
      for (std::size_t k = 0; k < fields.size(); ++k) CHECK(vf_apply(fields[k], b.poly) == b.poly * b.eigenvalues[k]);
    }
    for (auto& s : want) exp.push_back(parse_coordinate_poly(s));
    CHECK(span_basis(got) == span_basis(exp));
  }
}

TEST_CASE("rational eigenvalues") {
  auto m = RatMatrix::from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, Rational(-1, 2)}}, 3);
  auto ev = rational_eigenvalues(m);
  std::sort(ev.begin(), ev.end());
  CHECK(ev == std::vector<Rational>{Rational(-1, 2), 2});
  // x^2 + 1 has no rational roots
  CHECK(rational_eigenvalues(RatMatrix::from_rows({{0, -1}, {1, 0}}, 2)).empty());
}

TEST_CASE("Darboux families") {
  auto g = catalog("s1");
  auto fields = fundamental_fields(g, 2);
  auto fam = verify_family(fields, {Poly::var(4)});
  REQUIRE(fam);
  CHECK(fam->linear);
  CHECK(check_family(fields, *fam));
  auto fam2 = verify_family(fields, {Poly::var(5)});
  REQUIRE(fam2);
  auto sum = family_sum(fields, *fam, *fam2);
  CHECK(sum.generators.size() == 2);
  CHECK(check_family(fields, sum));
  // x1 alone is not preserved
  CHECK_FALSE(verify_family(fields, {Poly::var(0)}));
  // the mCYBE generators always form a family (cofactors of degree <= 2)
  auto ys = yb_system(g);
  CHECK(verify_family(fields, ys.mcybe, 2));
}

TEST_CASE("flow invariance to order 8") {
  auto g = catalog("s6");
  auto fields = fundamental_fields(g, 2);
  std::vector<Poly> gens = {Poly::var(4), Poly::var(5)};
  Vec p{1, -2, 1, 0, 0, 0};
  for (auto& x : fields) CHECK(flow_invariant(x, gens, p, 8));
  // x1 is moved off zero by some field
  bool moved = false;
  for (auto& x : fields) moved |= !flow_invariant(x, {Poly::var(0)}, Vec{0, 1, 1, 1, 0, 0}, 8);
  CHECK(moved);
}

TEST_CASE("locus sampling is deterministic and lands on the locus") {
  auto eqs = std::vector<Poly>{parse_coordinate_poly("x2*x5 - x3*x4"), Poly::var(5)};
  std::vector<Inequality> ineqs = {parse_inequality("x3^2 + x5^2 != 0", {})};
  auto a = sample_locus(eqs, ineqs, 6);
  auto b = sample_locus(eqs, ineqs, 6);
  CHECK(a == b);
  REQUIRE_FALSE(a.empty());
  TreeBranch br{"t", eqs, ineqs};
  for (auto& p : a) CHECK(locus_contains(br, p));
}

TEST_CASE("emptiness certificates") {
  // x5 = 0 and x5 != 0
  CHECK(certify_empty({Poly::var(4)}, {parse_inequality("x5 != 0", {})}));
  // x6 = k with k != 0 forces x6 != 0; inhomogeneous generator
  CHECK(certify_empty({parse_coordinate_poly("x6 - 2"), parse_coordinate_poly("x6*x1")}, {parse_inequality("x1 != 0", {})}));
  CHECK_FALSE(certify_empty({Poly::var(0)}, {parse_inequality("x2 != 0", {})}));
}

TEST_CASE("s1 tree branches") {
  auto g = catalog("s1");
  auto b = parse_branch("x5=0, x3=0 | x6!=0, x1!=0", {}, "VIII");
  auto samples = sample_locus(b.equalities, b.inequalities, 6);
  auto rep = verify_branch(g, b, samples);
  CHECK(rep.status == BranchStatus::Pass);
  CHECK(rep.flow_ok);
  auto e = parse_branch("x5=0 | x6!=0, x3!=0", {}, "empty");
  CHECK(verify_empty_branch(g, e).status == BranchStatus::NoSolutions);
  // a populated branch is never certified empty
  CHECK(verify_empty_branch(g, b).status == BranchStatus::Fail);
}

TEST_CASE("a wrong expected dimension is reported") {
  auto g = catalog("s1");
  auto b = parse_branch("x5=0, x6=0, x3=0, x4=0, x2=0 | x1!=0", {}, "I");
  auto samples = sample_locus(b.equalities, b.inequalities, 6);
  CHECK(verify_branch(g, b, samples, 1).status == BranchStatus::Pass);
  CHECK(verify_branch(g, b, samples, 2).status == BranchStatus::Fail);
}

TEST_CASE("candidate representative for the four-dimensional stratum of s3(1, beta)") {
  OrbitBlock block;
  for (auto& b : load_orbit_table("s3"))
    if (b.name == "s3-1b") block = b;
  const auto* row = block.row("sIV");
  REQUIRE(row);
  for (auto& p : block.samples) {
    CAPTURE(format_params(p));
    auto g = catalog("s3", p);
    auto br = parse_branch(row->locus, p);
    Vec printed = parse_bivector(row->rep, 4, p), e14 = parse_bivector("e14", 4, p);
    CHECK_FALSE(locus_contains(br, printed));
    CHECK(orbit_dim(g, bivector_from_coords(4, printed)) == 2);
    CHECK(locus_contains(br, e14));
    CHECK(is_mcybe_solution(g, e14));
    CHECK(orbit_dim(g, bivector_from_coords(4, e14)) == row->dim);
  }
}

TEST_CASE("generic fields keep the s8 tree ranks constant at alpha = 1") {
  Params one{{"alpha", Rational(1)}};
  auto g = catalog("s8", one);
  auto generic = generic_fields("s8", one);
  auto full = fundamental_fields(g, 2);
  CHECK(generic.size() == 5);
  CHECK(full.size() == 7);
  auto b = parse_branch("x6=0, x5=0, x4=0, x3=0 | x2!=0, x1!=0", one, "III");
  auto samples = sample_locus(b.equalities, b.inequalities, 6);
  CHECK(verify_branch(g, generic, b, samples).status == BranchStatus::Pass);
}

}  // TEST_SUITE
