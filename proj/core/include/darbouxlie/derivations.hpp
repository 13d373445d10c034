#pragma once

#include <vector>

#include "darbouxlie/exactmath.hpp"
#include "darbouxlie/grassmann.hpp"
#include "darbouxlie/liealg.hpp"

namespace dlie {

struct NotAnAutomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Linear vector field X(p) = A p on the coordinates of Lambda^m g.
struct LinearVectorField {
  RatMatrix a;
  std::size_t size() const { return a.rows(); }
};

// d[e_i,e_j] = [d e_i, e_j] + [e_i, d e_j]; column j of d is d(e_j).
bool is_derivation(const LieAlgebra& g, const RatMatrix& d);
std::vector<RatMatrix> derivation_basis(const LieAlgebra& g);
// Linear system whose kernel is Der(g): unknown d(k,l) in column k*n + l.
RatMatrix derivation_system(const LieAlgebra& g);

// T[e_i,e_j] = [T e_i, T e_j] and T invertible.
bool is_automorphism(const LieAlgebra& g, const RatMatrix& t);
void require_automorphism(const LieAlgebra& g, const RatMatrix& t);

LinearVectorField lift(const RatMatrix& d, int m);
std::vector<LinearVectorField> fundamental_fields(const LieAlgebra& g, int m);

// Rank of {X_k(p)}: the dimension of the tangent space to the orbit through p.
int rank_at(const std::vector<LinearVectorField>& fields, const Vec& p);
int orbit_dim(const LieAlgebra& g, const MultiVector& w);

// (X f)(p) = sum_a (A p)_a df/dx_a.
Poly vf_apply(const LinearVectorField& x, const Poly& f);

// Commutator of matrices [a, b] = ab - ba.
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

// Whether v lies in the span of the given vectors.
bool in_span(const std::vector<Vec>& span, const Vec& v);
Vec flatten(const RatMatrix& m);

}  // namespace dlie
