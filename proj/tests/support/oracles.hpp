#pragma once

#include <map>
#include <string>
#include <vector>

#include "darbouxlie/centerext.hpp"
#include "darbouxlie/grassmann.hpp"
#include "darbouxlie/liealg.hpp"

// Reference values shared by the unit tests and the acceptance binary.

namespace dlie::testing {

// Single blade from its name ("e123").
Blade blade(const std::string& name);

// {"123": "2*(x1*x6 - x2)", ...} -> sum of coefficient * blade.
SymMultiVector sym_from_text(int n, const std::map<std::string, std::string>& coeffs, const Params& p = {});

bool same_span(const std::vector<MultiVector>& a, const std::vector<MultiVector>& b);
std::vector<MultiVector> blades(int n, const std::vector<std::string>& names);

// Invariant spaces stated for one parameter sample.
struct InvariantCase {
  std::string family;
  Params params;
  std::vector<std::string> inv2, inv3;  // spanning blades
};
std::vector<InvariantCase> invariant_cases();

// [r, r] for the generic bivector, written out by hand for some families.
struct RrCase {
  std::string family;
  Params params;
  std::map<std::string, std::string> coeffs;
};
std::vector<RrCase> rr_cases();

// The four matrices R_{e_i} of s1 for alpha = (1, 1, 0, 0).
GradingSolution s1_reference_grading();
std::vector<RatMatrix> s1_reference_matrices();

// Expected bricks (as primitive linear forms).
struct BrickCase {
  std::string family;
  Params params;
  std::vector<std::string> bricks;
};
std::vector<BrickCase> brick_cases();

// Fundamental fields of s1 on Lambda^2, written out by hand.
std::vector<RatMatrix> s1_reference_fields();

// Every catalog family paired with a few parameter samples inside the admissible range.
std::vector<std::pair<std::string, Params>> catalog_samples();

}  // namespace dlie::testing
