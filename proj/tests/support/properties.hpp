#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "darbouxlie/grassmann.hpp"
#include "darbouxlie/liealg.hpp"

// Randomized exact property checks.  Each runner draws `count` instances from a
// seeded generator and reports how many failed, with the first counterexample.

namespace dlie::testing {

struct PropertyResult {
  std::string name;
  std::size_t instances = 0, failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && instances > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rational rational(int num = 3, int den = 3);
  Vec vec(int n, int num = 3, int den = 3);
  MultiVector multivector(int n, int deg);
  // A catalog algebra at random admissible parameters.
  LieAlgebra algebra();
};

PropertyResult schouten_graded_symmetry(std::size_t count, unsigned seed = 1);
PropertyResult schouten_leibniz(std::size_t count, unsigned seed = 2);
PropertyResult schouten_graded_jacobi(std::size_t count, unsigned seed = 3);
PropertyResult catalog_jacobi(std::size_t count, unsigned seed = 4);
PropertyResult derivation_closure(std::size_t count, unsigned seed = 5);
PropertyResult lift_is_homomorphism(std::size_t count, unsigned seed = 6);
PropertyResult random_cocycle_identity(std::size_t count, unsigned seed = 7);
PropertyResult mcybe_consistency(std::size_t count, unsigned seed = 8);
// One instance per orbit table record (every block, every sample).
PropertyResult table_cocycle_identity();

}  // namespace dlie::testing
