#include <doctest.h>

#include "support/properties.hpp"

using namespace dlie::testing;

namespace {

void check(const PropertyResult& r, std::size_t min_instances) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.instances >= min_instances);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("Schouten graded symmetry") { check(schouten_graded_symmetry(1000, 101), 1000); }
TEST_CASE("Schouten Leibniz rule") { check(schouten_leibniz(1000, 102), 1000); }
TEST_CASE("Schouten graded Jacobi") { check(schouten_graded_jacobi(1000, 103), 1000); }
TEST_CASE("Jacobi identity at random parameters") { check(catalog_jacobi(1000, 104), 1000); }
TEST_CASE("derivations form a Lie algebra") { check(derivation_closure(1000, 105), 1000); }
TEST_CASE("lift of derivations is a homomorphism") { check(lift_is_homomorphism(1000, 106), 1000); }
TEST_CASE("cocycle identity for random bivectors") { check(random_cocycle_identity(1000, 107), 1000); }
TEST_CASE("mCYBE system matches the direct test") { check(mcybe_consistency(1000, 108), 1000); }

}  // TEST_SUITE
