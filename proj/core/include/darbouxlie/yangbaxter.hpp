#pragma once

#include <string>
#include <vector>

#include "darbouxlie/derivations.hpp"
#include "darbouxlie/grassmann.hpp"
#include "darbouxlie/liealg.hpp"

namespace dlie {

struct YbSystem {
  SymMultiVector rr;                 // [r, r] for the generic bivector r
  std::vector<Poly> cybe;            // nonzero coefficients of [r, r]
  std::vector<Poly> mcybe;           // coefficients surviving the projection that kills (Lambda^3 g)^g
  std::vector<MultiVector> inv3;     // basis of (Lambda^3 g)^g
  std::vector<std::size_t> inv3_pivots;  // Lambda^3 coordinates eliminated by the projection
};

YbSystem yb_system(const LieAlgebra& g);

// Canonical basis of the Q-span of polynomials: RREF on monomial coefficients,
// each element scaled to a primitive integer polynomial with positive leading coefficient.
std::vector<Poly> span_basis(const std::vector<Poly>& ps);
Poly primitive(const Poly& p);

// Generators with the same real zero set, simplified: a quadratic form that is
// semidefinite of rank one is kept as a square l^2; higher-rank semidefinite forms
// are replaced by the linear forms of their row space; linear forms are then
// eliminated from the remaining generators.  Used for display only.
std::vector<Poly> simplify_real_locus(const std::vector<Poly>& gens);

// If the homogeneous quadratic q is positive or negative semidefinite, returns a basis
// of linear forms whose common zeros (over R) equal those of q; otherwise nullopt.
std::optional<std::vector<Poly>> semidefinite_linear_forms(const Poly& q);

// Projection of a Lambda^m coordinate vector killing the pivot coordinates of an
// invariant basis; returns the remaining (non-pivot) coordinates.
struct InvariantQuotient {
  int n = 0, m = 0;
  RrefResult rr;           // rref of invariant basis as rows
  std::vector<std::size_t> free;  // non-pivot coordinate positions
  Vec reduce(const Vec& coords) const;  // full-length, pivot entries zeroed
  Vec project(const Vec& coords) const;  // only the free coordinates
};
InvariantQuotient make_quotient(const LieAlgebra& g, int m);

bool is_mcybe_solution(const LieAlgebra& g, const Vec& r);
bool is_cybe_solution(const LieAlgebra& g, const Vec& r);
MultiVector cocommutator(const LieAlgebra& g, const Vec& r, const Vec& v);
// delta([v1,v2]) = [v1, delta v2] - [v2, delta v1] on all basis pairs.
bool cocycle_identity_holds(const LieAlgebra& g, const Vec& r);

Vec quotient_class(const LieAlgebra& g, const Vec& r);
// Throws NotAnAutomorphism.
bool same_coboundary(const LieAlgebra& g, const Vec& r1, const Vec& r2, const RatMatrix& t);

// Rank of the antisymmetric matrix of a bivector.
int bivector_rank(const MultiVector& r);

struct NecessaryReport {
  int rank1 = 0, rank2 = 0;
  bool cybe1 = false, cybe2 = false;
  int rr_orbit_dim1 = 0, rr_orbit_dim2 = 0;
  bool provably_inequivalent = false;
  std::vector<std::string> reasons;
};
NecessaryReport necessary_checks(const LieAlgebra& g, const Vec& r1, const Vec& r2);

}  // namespace dlie
