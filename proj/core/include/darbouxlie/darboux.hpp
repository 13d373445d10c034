#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darbouxlie/derivations.hpp"
#include "darbouxlie/yangbaxter.hpp"

namespace dlie {

struct IncompatibleFields : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DarbouxFamily {
  std::vector<Poly> generators;
  // cofactors[x][j][i]: X_x f_j = sum_i cofactors[x][j][i] * f_i
  std::vector<std::vector<std::vector<Poly>>> cofactors;
  bool linear = true;
};

std::optional<DarbouxFamily> verify_family(const std::vector<LinearVectorField>& fields, const std::vector<Poly>& gens,
                                           int cofactor_degree_bound = 0);

// Checks a cofactor table by re-multiplying (never trusts the solver).
bool check_family(const std::vector<LinearVectorField>& fields, const DarbouxFamily& fam);

DarbouxFamily family_sum(const std::vector<LinearVectorField>& fields, const DarbouxFamily& a, const DarbouxFamily& b,
                         int cofactor_degree_bound = 0);

struct Brick {
  Poly poly;
  std::vector<Rational> eigenvalues;  // one per field
};
// Common eigenvectors (as linear forms) of all transposed field matrices,
// restricted to rational eigenvalues.
std::vector<Brick> find_bricks(const std::vector<LinearVectorField>& fields);

// Rational eigenvalues of a square matrix (characteristic polynomial + rational root test).
std::vector<Rational> rational_eigenvalues(const RatMatrix& a);

enum class SignCond { NonZero, Positive, Negative };
struct Inequality {
  Poly poly;
  SignCond sign = SignCond::NonZero;
};
std::string to_string(const Inequality& q, const VarNamer& name = default_var_name);

struct TreeBranch {
  std::string label;
  std::vector<Poly> equalities;
  std::vector<Inequality> inequalities;
};

bool holds(const Inequality& q, const Vec& p);
bool locus_contains(const TreeBranch& b, const Vec& p);

// Points of {eqs = 0, ineqs hold} found by a deterministic randomized solver over
// small integers (coordinates in [-2, 2], half of them zero), solving equations that
// are linear in some variable.  At most `per_pattern` points per sign pattern of the
// inequality polynomials.
std::vector<Vec> sample_locus(const std::vector<Poly>& eqs, const std::vector<Inequality>& ineqs, int nvars,
                              int per_pattern = 2, int trials = 3000, unsigned seed = 12345);

// p(t) = sum_{k<=K} t^k A^k p / k!; every f must vanish on it to order t^K.
bool flow_invariant(const LinearVectorField& x, const std::vector<Poly>& gens, const Vec& p, int order = 8);

// A product of a nonempty subset of the inequality polynomials (or its square) lies in the ideal of `eqs`
// (cofactors of degree <= bound): then eqs and the inequalities have no common real point.
std::optional<std::vector<std::size_t>> certify_empty(const std::vector<Poly>& eqs,
                                                      const std::vector<Inequality>& ineqs, int bound = 2);

enum class BranchStatus { Pass, NoSolutions, Unconfirmed, Fail };
std::string to_string(BranchStatus s);

struct BranchReport {
  std::string label;
  BranchStatus status = BranchStatus::Fail;
  bool family_ok = false;
  bool family_linear = false;
  std::vector<int> ranks;
  bool flow_ok = true;
  std::size_t samples = 0;
  std::vector<std::string> failures;
};

// Verifies a populated branch: (a) equalities together with the mCYBE generators form a
// Darboux family, (b) the rank of M(p) is constant on the samples and equals expected_dim
// when given, (c) every sample solves the mCYBE, plus flow invariance at every sample.
BranchReport verify_branch(const LieAlgebra& g, const TreeBranch& branch, const std::vector<Vec>& samples,
                           std::optional<int> expected_dim = std::nullopt);
// Same, with an explicit Lie algebra of fields (e.g. derivations shared by a whole family).
BranchReport verify_branch(const LieAlgebra& g, const std::vector<LinearVectorField>& fields, const TreeBranch& branch,
                           const std::vector<Vec>& samples, std::optional<int> expected_dim = std::nullopt);

// Verifies an empty ("No solutions") branch: certified by ideal membership, refuted by
// any sampled mCYBE point, otherwise "unconfirmed".
BranchReport verify_empty_branch(const LieAlgebra& g, const TreeBranch& branch);

}  // namespace dlie
