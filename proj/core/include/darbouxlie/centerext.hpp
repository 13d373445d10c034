#pragma once

#include <optional>
#include <vector>

#include "darbouxlie/liealg.hpp"

namespace dlie {

// [e, e_i] = alpha_i e_i on g + <e>, with alpha_i + alpha_j = alpha_k whenever c_ij^k != 0
// and diag(alpha) injective on the center.
struct GradingSolution {
  Vec alphas;
  std::vector<Vec> center;
};

// Integer point of the solution space with the smallest max|alpha_i|, ties broken
// lexicographically; |alpha_i| <= dim.  nullopt when no admissible grading exists.
std::optional<GradingSolution> solve_grading(const LieAlgebra& g);

// Linear constraints on alpha (rows of the homogeneous system).
RatMatrix grading_system(const LieAlgebra& g);
bool grading_is_admissible(const LieAlgebra& g, const Vec& alphas);

struct MatrixRep {
  std::vector<RatMatrix> matrices;  // R_{e_i}, (n+1) x (n+1), last basis vector is e
};

MatrixRep build_rep(const LieAlgebra& g, const GradingSolution& sol);
LieAlgebra extended_algebra(const LieAlgebra& g, const Vec& alphas);

// [R_i, R_j] = sum_k c_ij^k R_k for all pairs.
bool commutation_fidelity(const LieAlgebra& g, const MatrixRep& rep);
// R_v = 0 only for v = 0.
bool is_faithful(const MatrixRep& rep);

}  // namespace dlie
