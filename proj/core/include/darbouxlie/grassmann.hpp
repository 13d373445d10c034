#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "darbouxlie/exactmath.hpp"
#include "darbouxlie/liealg.hpp"

namespace dlie {

// A basis blade e_{i1...im} as a bitmask over dim <= 8.
using Blade = std::uint32_t;

inline int blade_degree(Blade b) { return std::popcount(b); }
// Ordering of blades of equal degree: lexicographic on the sorted index tuple.
struct BladeLess {
  bool operator()(Blade a, Blade b) const {
    int da = blade_degree(a), db = blade_degree(b);
    if (da != db) return da < db;
    Blade d = a ^ b;
    if (!d) return false;
    return (a & d & (~d + 1)) != 0;
  }
};

// Sign of e_a ^ e_b relative to e_{a|b}; 0 if they share an index.
int wedge_sign(Blade a, Blade b);
std::vector<int> blade_indices(Blade b);
Blade blade_from_indices(const std::vector<int>& idx);
std::string blade_name(Blade b);  // "e134"
std::string blade_digits(Blade b);  // "134"
// All degree-m blades of an n-dim space in lexicographic order: the coordinate basis of Lambda^m.
const std::vector<Blade>& blade_basis(int n, int m);
int blade_position(int n, Blade b);  // index within blade_basis(n, degree)
int binomial(int n, int k);

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Poly& c) { return c.is_zero(); }

// Homogeneous element of Lambda^m of an n-dimensional space, coefficients in C.
template <class C>
class MV {
 public:
  MV() = default;
  MV(int n, int deg) : n_(n), deg_(deg) {}
  static MV blade(int n, Blade b, const C& c = C(1)) {
    MV m(n, blade_degree(b));
    m.add(b, c);
    return m;
  }
  static MV vector(const Vec& v) {
    MV m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.add(Blade(1) << i, C(v[i]));
    return m;
  }

  int dim() const { return n_; }
  int degree() const { return deg_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Blade, C, BladeLess>& terms() const { return t_; }
  C coeff(Blade b) const {
    auto it = t_.find(b);
    return it == t_.end() ? C(0) : it->second;
  }

  void add(Blade b, const C& c) {
    if (blade_degree(b) != deg_) throw DimensionMismatch("blade degree does not match multivector degree");
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = t_.emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) t_.erase(it);
    }
  }
  MV& operator+=(const MV& o) {
    check(o);
    for (auto& [b, c] : o.t_) add(b, c);
    return *this;
  }
  MV& operator-=(const MV& o) {
    check(o);
    for (auto& [b, c] : o.t_) add(b, -c);
    return *this;
  }
  friend MV operator+(MV a, const MV& b) { return a += b; }
  friend MV operator-(MV a, const MV& b) { return a -= b; }
  MV scaled(const C& s) const {
    MV r(n_, deg_);
    for (auto& [b, c] : t_) r.add(b, c * s);
    return r;
  }
  bool operator==(const MV& o) const { return n_ == o.n_ && (deg_ == o.deg_ || (is_zero() && o.is_zero())) && t_ == o.t_; }
  bool operator!=(const MV& o) const { return !(*this == o); }

  // Coordinates in blade_basis(n, deg) order.
  std::vector<C> coords() const {
    const auto& basis = blade_basis(n_, deg_);
    std::vector<C> v(basis.size(), C(0));
    for (auto& [b, c] : t_) v[blade_position(n_, b)] = c;
    return v;
  }
  static MV from_coords(int n, int deg, const std::vector<C>& v) {
    const auto& basis = blade_basis(n, deg);
    if (v.size() != basis.size()) throw DimensionMismatch("coordinate vector has wrong length");
    MV m(n, deg);
    for (std::size_t i = 0; i < v.size(); ++i) m.add(basis[i], v[i]);
    return m;
  }

 private:
  void check(const MV& o) const {
    if (n_ != o.n_) throw DimensionMismatch("multivectors over different dimensions");
    if (deg_ != o.deg_ && !o.is_zero() && !is_zero()) throw DimensionMismatch("adding multivectors of different degree");
  }
  int n_ = 0, deg_ = 0;
  std::map<Blade, C, BladeLess> t_;
};

using MultiVector = MV<Rational>;
using SymMultiVector = MV<Poly>;

template <class C>
MV<C> wedge(const MV<C>& a, const MV<C>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge: different parent dimensions");
  MV<C> r(a.dim(), a.degree() + b.degree());
  for (auto& [ba, ca] : a.terms())
    for (auto& [bb, cb] : b.terms()) {
      int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      C c = ca * cb;
      r.add(ba | bb, s > 0 ? c : C(-c));
    }
  return r;
}

// Schouten bracket of two basis blades (rational coefficients).
MultiVector schouten_blades(const LieAlgebra& g, Blade a, Blade b);

template <class C>
MV<C> schouten(const LieAlgebra& g, const MV<C>& a, const MV<C>& b) {
  if (a.dim() != g.dim() || b.dim() != g.dim()) throw DimensionMismatch("schouten: multivector dimension differs from algebra");
  int deg = a.degree() + b.degree() - 1;
  MV<C> r(g.dim(), deg < 0 ? 0 : deg);
  if (a.degree() == 0 || b.degree() == 0) return r;
  for (auto& [ba, ca] : a.terms())
    for (auto& [bb, cb] : b.terms()) {
      MultiVector s = schouten_blades(g, ba, bb);
      if (s.is_zero()) continue;
      C f = ca * cb;
      for (auto& [bs, cs] : s.terms()) r.add(bs, f * cs);
    }
  return r;
}

// ad_v(w) = [v, w].
MultiVector ad_action(const LieAlgebra& g, const Vec& v, const MultiVector& w);

// Basis of (Lambda^m g)^g.
std::vector<MultiVector> invariants(const LieAlgebra& g, int m);

// Generic bivector r = sum_a x_a e_{blade_basis(n,2)[a]}.
SymMultiVector generic_bivector(int n);
SymMultiVector to_sym(const MultiVector& w);
MultiVector evaluate(const SymMultiVector& w, const Vec& point);

// Matrices of Lambda^m T (group lift) and Lambda^m d (Leibniz lift) in the blade basis.
RatMatrix lift_group(const RatMatrix& t, int m);
RatMatrix lift_derivation(const RatMatrix& d, int m);
MultiVector apply(const RatMatrix& lifted, const MultiVector& w);

// Display: "2*e123 - e134", "0" for zero.
std::string to_string(const MultiVector& w);
std::string to_string(const SymMultiVector& w, const VarNamer& name = default_var_name);
// Parses "e12 + 2*e34" (blades of equal degree); params give named constants.
MultiVector parse_multivector(std::string_view text, int n, const Params& params = {});
// Bivector coordinates x1..x_N from a multivector.
Vec bivector_coords(const MultiVector& w);
MultiVector bivector_from_coords(int n, const Vec& x);

}  // namespace dlie
