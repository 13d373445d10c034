#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "darbouxlie/classify.hpp"
#include "darbouxlie/expr.hpp"
#include "darbouxlie/golden.hpp"

using namespace dlie;
namespace fs = std::filesystem;

namespace {

// A throwaway data directory; DARBOUXLIE_DATA points at it while alive.
struct ScratchData {
  fs::path root;
  std::string old;
  bool had_old = false;
  ScratchData() {
    root = fs::temp_directory_path() / ("dlie-test-" + std::to_string(::getpid()));
    fs::create_directories(root / "trees");
    fs::create_directories(root / "orbits");
    if (const char* o = std::getenv("DARBOUXLIE_DATA")) {
      old = o;
      had_old = true;
    }
    ::setenv("DARBOUXLIE_DATA", root.c_str(), 1);
  }
  ~ScratchData() {
    if (had_old)
      ::setenv("DARBOUXLIE_DATA", old.c_str(), 1);
    else
      ::unsetenv("DARBOUXLIE_DATA");
    fs::remove_all(root);
  }
  void write(const std::string& rel, const std::string& text) { std::ofstream(root / rel) << text; }
};

}  // namespace

TEST_SUITE("golden") {

TEST_CASE("conditions") {
  Params p{{"alpha", Rational(-1)}, {"beta", Rational(1, 2)}};
  CHECK(eval_condition("", p));
  CHECK(eval_condition("alpha==-1", p));
  CHECK(eval_condition("alpha+beta==-1/2 && beta>0", p));
  CHECK(eval_condition("alpha==1 || beta<1", p));
  CHECK_FALSE(eval_condition("alpha==1 || beta<0 && alpha==-1", p));
  CHECK(eval_condition("alpha!=0", p));
  CHECK_THROWS_AS(eval_condition("alpha", p), ParseError);
  CHECK_THROWS_AS(eval_condition("gamma==1", p), ParseError);
}

TEST_CASE("assignments and records") {
  auto p = parse_assignments("alpha=1/2 beta=-1");
  CHECK(p.at("alpha") == Rational(1, 2));
  CHECK(p.at("beta") == -1);
  CHECK_THROWS_AS(parse_assignments("alpha"), ParseError);
  auto r = parse_record("row IV : x1=0 | x4!=0 ; dim=1 ; rep=e23", 7);
  CHECK(r.keyword == "row");
  CHECK(r.label == "IV");
  CHECK(r.body == "x1=0 | x4!=0");
  CHECK(r.field("dim") == "1");
  CHECK(r.field("star", "0") == "0");
  CHECK(r.line == 7);
  CHECK(family_params("s8", {{"alpha", Rational(1)}, {"k", Rational(2)}}).size() == 1);
}

TEST_CASE("branches and inequalities") {
  Params p{{"alpha", Rational(2)}};
  auto b = parse_branch("x1 = alpha*x2, x3=0 | x4 != 0, x5 > 0, x6 < 0", p, "L");
  CHECK(b.label == "L");
  CHECK(b.equalities.size() == 2);
  CHECK(b.equalities[0] == parse_coordinate_poly("x1 - 2*x2"));
  REQUIRE(b.inequalities.size() == 3);
  CHECK(b.inequalities[1].sign == SignCond::Positive);
  CHECK(b.inequalities[2].sign == SignCond::Negative);
  CHECK(locus_contains(b, Vec{2, 1, 0, 1, 1, -1}));
  CHECK_FALSE(locus_contains(b, Vec{2, 1, 0, 1, 0, -1}));
  CHECK_THROWS_AS(parse_branch("x1 | x2", p), ParseError);
  CHECK_THROWS_AS(parse_inequality("x1 >= 0", p), ParseError);
  CHECK(parse_bivector("0", 4, p) == Vec(6));
  CHECK_THROWS_AS(parse_bivector("e123", 4, p), ParseError);
}

TEST_CASE("shipped tables load") {
  for (auto& f : catalog_families()) {
    CAPTURE(f);
    CHECK_FALSE(load_schouten_table(f).empty());
    CHECK_FALSE(load_trees(f).empty());
    CHECK_FALSE(load_orbit_table(f).empty());
    CHECK_FALSE(load_ybe_reference(f).systems.empty());
    CHECK_FALSE(schouten_samples(f).empty());
  }
}

TEST_CASE("tree files: unknown keywords and field modes are rejected") {
  ScratchData d;
  d.write("trees/s1.txt", "tree t\nsample\nleaf 0 : x1=0\nend\n");
  CHECK(load_trees("s1").size() == 1);
  d.write("trees/s1.txt", "tree t\nsample\nfields generic\nleaf 0 : x1=0\nend\n");
  CHECK(load_trees("s1").at(0).generic);
  d.write("trees/s1.txt", "tree t\nfields restricted\nend\n");
  CHECK_THROWS_AS(load_trees("s1"), ParseError);
  d.write("trees/s1.txt", "tree t\nrestrict x6=0\nend\n");
  CHECK_THROWS_AS(load_trees("s1"), ParseError);
  d.write("trees/s1.txt", "leaf 0 : x1=0\n");
  CHECK_THROWS_AS(load_trees("s1"), ParseError);
  CHECK_THROWS_AS(load_trees("s2"), GoldenDataMissing);
}

TEST_CASE("orbit files: references must resolve") {
  ScratchData d;
  d.write("orbits/s1.txt",
          "block b\nsample\nrow A : x1=0 ; dim=0 ; rep=0\naut id : 1 0 0 0 / 0 1 0 0 / 0 0 1 0 / 0 0 0 1\n"
          "merge A -> A ; aut=id\nend\n");
  auto blocks = load_orbit_table("s1");
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].merges.size() == 1);
  CHECK(instantiate_aut(*blocks[0].aut("id"), 4, {}) == RatMatrix::identity(4));
  d.write("orbits/s1.txt", "block b\nrow A : x1=0 ; dim=0\nmerge A -> B ; aut=id\nend\n");
  CHECK_THROWS_AS(load_orbit_table("s1"), ParseError);
  d.write("orbits/s1.txt", "block b\nrow A : x1=0\nend\n");
  CHECK_THROWS_AS(load_orbit_table("s1"), ParseError);
  d.write("orbits/s1.txt", "block b\naut t : 1 0 / 0 1\nend\n");
  CHECK_THROWS_AS(instantiate_aut(*load_orbit_table("s1")[0].aut("t"), 4, {}), DimensionMismatch);
}

}  // TEST_SUITE

TEST_SUITE("classify") {

TEST_CASE("Schouten tables of families without errata") {
  for (const char* f : {"s1", "s2", "s3", "s6", "s7", "s8", "s9", "s10", "s11", "n1"}) {
    CAPTURE(f);
    auto r = verify_schouten_table(f);
    CHECK(r.entries > 0);
    CHECK(r.pass());
  }
}

TEST_CASE("Yang-Baxter loci of s1 and s6") {
  for (const char* f : {"s1", "s6"})
    for (auto& c : compare_ybe_locus(f, 500)) {
      CAPTURE(f);
      CAPTURE(c.kind);
      CHECK(c.pass());
      CHECK(c.points >= 500);
    }
}

TEST_CASE("orbit table of s1") {
  auto r = verify_orbit_table("s1");
  CHECK(r.pass());
  for (auto& x : r.records) {
    CHECK(x.in_locus);
    CHECK(x.mcybe);
    CHECK(x.cocycle);
  }
}

TEST_CASE("trees of s1 and s6") {
  for (const char* f : {"s1", "s6"})
    for (auto& run : verify_trees(f)) {
      CAPTURE(run.tree);
      CHECK(run.pass());
    }
}

TEST_CASE("coboundary witnesses of s1") {
  auto r = verify_coboundary_classes("s1");
  CHECK(r.pass());
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("automorphism witness rejects non-automorphisms") {
  auto g = catalog("s1");
  auto to = parse_branch("x5=0", {});
  CHECK_THROWS_AS(verify_automorphism_witness(g, RatMatrix(4, 4), Vec(6), to), NotAnAutomorphism);
  CHECK(verify_automorphism_witness(g, RatMatrix::identity(4), Vec{1, 0, 0, 0, 0, 0}, to));
}

}  // TEST_SUITE
