#include "darbouxlie/yangbaxter.hpp"

#include <algorithm>
#include <numeric>

namespace dlie {

// ---------------------------------------------------------------- spans of polynomials

Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  if (p.terms().begin()->second < 0) s = -s;
  return p * s;
}

std::vector<Poly> span_basis(const std::vector<Poly>& ps) {
  std::map<Monomial, std::size_t> col_of;  // descending grlex
  for (auto& p : ps)
    for (auto& [m, c] : p.terms()) col_of.emplace(m, 0);
  std::vector<Monomial> mons;
  for (auto& [m, idx] : col_of) {
    idx = mons.size();
    mons.push_back(m);
  }
  if (mons.empty()) return {};
  RatMatrix a(ps.size(), mons.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (auto& [m, c] : ps[i].terms()) a(i, col_of[m]) = c;
  auto [r, piv] = rref(a);
  std::vector<Poly> out;
  for (std::size_t k = 0; k < piv.size(); ++k) {
    Poly p;
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (r(k, j) != 0) p += Poly::monomial(mons[j], r(k, j));
    out.push_back(primitive(p));
  }
  return out;
}

std::optional<std::vector<Poly>> semidefinite_linear_forms(const Poly& q) {
  if (q.is_zero() || q.degree() != 2 || !q.is_homogeneous()) return std::nullopt;
  int n = q.max_var() + 1;
  RatMatrix s(n, n);
  for (auto& [m, c] : q.terms()) {
    auto& pw = m.powers();
    if (pw.size() == 1) {
      s(pw[0].first, pw[0].first) = c;
    } else {
      s(pw[0].first, pw[1].first) = c / 2;
      s(pw[1].first, pw[0].first) = c / 2;
    }
  }
  // symmetric elimination; all nonzero pivots must share a sign
  RatMatrix w = s;
  int sign = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && w(i, i) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[i] && !done[j] && w(i, j) != 0) return std::nullopt;  // zero diagonal, nonzero off-diagonal
      break;
    }
    int sg = w(p, p) > 0 ? 1 : -1;
    if (sign != 0 && sg != sign) return std::nullopt;
    sign = sg;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || w(i, p) == 0) continue;
      Rational f = w(i, p) / w(p, p);
      for (int j = 0; j < n; ++j)
        if (!done[j]) w(i, j) -= f * w(p, j);
    }
  }
  // real zeros of a semidefinite form = kernel of its matrix: cut out by the row space
  auto [r, piv] = rref(s);
  std::vector<Poly> forms;
  for (std::size_t k = 0; k < piv.size(); ++k) {
    Poly l;
    for (int j = 0; j < n; ++j) l += Poly::var(j) * r(k, j);
    forms.push_back(primitive(l));
  }
  return forms;
}

namespace {

// Eliminate variables using linear forms: substitution x_pivot -> -(rest).
std::map<int, Poly> linear_substitution(const std::vector<Poly>& lin) {
  int n = 0;
  for (auto& l : lin) n = std::max(n, l.max_var() + 1);
  RatMatrix a(lin.size(), n);
  for (std::size_t i = 0; i < lin.size(); ++i)
    for (auto& [m, c] : lin[i].terms()) a(i, m.powers()[0].first) = c;
  auto [r, piv] = rref(a);
  std::map<int, Poly> sub;
  for (std::size_t k = 0; k < piv.size(); ++k) {
    Poly rest;
    for (int j = 0; j < n; ++j)
      if (j != static_cast<int>(piv[k]) && r(k, j) != 0) rest -= Poly::var(j) * r(k, j);
    sub[static_cast<int>(piv[k])] = rest;
  }
  return sub;
}

}  // namespace

std::vector<Poly> simplify_real_locus(const std::vector<Poly>& gens) {
  std::vector<Poly> display;  // linear-derived generators as they will be shown
  std::vector<Poly> lin;
  std::vector<Poly> g = span_basis(gens);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Poly> rest;
    for (auto& p : g) {
      if (p.degree() == 1 && p.is_homogeneous()) {
        lin.push_back(p);
        display.push_back(p);
        changed = true;
      } else if (auto forms = semidefinite_linear_forms(p)) {
        for (auto& f : *forms) lin.push_back(f);
        if (forms->size() == 1)
          display.push_back(primitive(forms->front() * forms->front()));
        else
          display.insert(display.end(), forms->begin(), forms->end());
        changed = true;
      } else {
        rest.push_back(p);
      }
    }
    if (changed) {
      auto sub = linear_substitution(lin);
      for (auto& p : rest) p = p.subs(sub);
    }
    g = span_basis(rest);
  }
  std::vector<Poly> out = display;
  for (auto& p : out) p = primitive(p);
  out.insert(out.end(), g.begin(), g.end());
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return grlex_less(b.terms().begin()->first, a.terms().begin()->first);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- invariant quotients

Vec InvariantQuotient::reduce(const Vec& c) const {
  Vec out = c;
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    Rational f = out[rr.pivots[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (rr.m(k, j) != 0) out[j] -= f * rr.m(k, j);
  }
  return out;
}

Vec InvariantQuotient::project(const Vec& c) const {
  Vec red = reduce(c);
  Vec out;
  for (auto j : free) out.push_back(red[j]);
  return out;
}

InvariantQuotient make_quotient(const LieAlgebra& g, int m) {
  InvariantQuotient q;
  q.n = g.dim();
  q.m = m;
  std::size_t N = blade_basis(g.dim(), m).size();
  std::vector<Vec> rows;
  for (auto& w : invariants(g, m)) rows.push_back(w.coords());
  q.rr = rref(rows.empty() ? RatMatrix(0, N) : RatMatrix::from_rows(rows, N));
  std::vector<bool> is_piv(N, false);
  for (auto p : q.rr.pivots) is_piv[p] = true;
  for (std::size_t j = 0; j < N; ++j)
    if (!is_piv[j]) q.free.push_back(j);
  return q;
}

// ---------------------------------------------------------------- Yang-Baxter systems

YbSystem yb_system(const LieAlgebra& g) {
  YbSystem s;
  int n = g.dim();
  auto r = generic_bivector(n);
  s.rr = schouten(g, r, r);
  auto coords = s.rr.coords();
  for (auto& p : coords)
    if (!p.is_zero()) s.cybe.push_back(p);
  auto q = make_quotient(g, 3 <= n ? 3 : n);
  s.inv3 = invariants(g, 3 <= n ? 3 : n);
  s.inv3_pivots = q.rr.pivots;
  if (n < 3) return s;
  // same reduction as InvariantQuotient::reduce, over polynomial coordinates
  for (std::size_t k = 0; k < q.rr.pivots.size(); ++k) {
    Poly f = coords[q.rr.pivots[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < coords.size(); ++j)
      if (q.rr.m(k, j) != 0) coords[j] -= f * q.rr.m(k, j);
  }
  for (auto j : q.free)
    if (!coords[j].is_zero()) s.mcybe.push_back(coords[j]);
  return s;
}

bool is_mcybe_solution(const LieAlgebra& g, const Vec& r) {
  auto rv = bivector_from_coords(g.dim(), r);
  auto rr = schouten(g, rv, rv);
  for (int i = 0; i < g.dim(); ++i)
    if (!ad_action(g, basis_vector(g.dim(), i), rr).is_zero()) return false;
  return true;
}

bool is_cybe_solution(const LieAlgebra& g, const Vec& r) {
  auto rv = bivector_from_coords(g.dim(), r);
  return schouten(g, rv, rv).is_zero();
}

MultiVector cocommutator(const LieAlgebra& g, const Vec& r, const Vec& v) {
  return ad_action(g, v, bivector_from_coords(g.dim(), r));
}

bool cocycle_identity_holds(const LieAlgebra& g, const Vec& r) {
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec ei = basis_vector(n, i), ej = basis_vector(n, j);
      MultiVector lhs = cocommutator(g, r, g.bracket_basis(i, j));
      MultiVector rhs = ad_action(g, ei, cocommutator(g, r, ej)) - ad_action(g, ej, cocommutator(g, r, ei));
      if (lhs != rhs) return false;
    }
  return true;
}

Vec quotient_class(const LieAlgebra& g, const Vec& r) { return make_quotient(g, 2).project(r); }

bool same_coboundary(const LieAlgebra& g, const Vec& r1, const Vec& r2, const RatMatrix& t) {
  require_automorphism(g, t);
  auto q = make_quotient(g, 2);
  return q.project(lift_group(t, 2) * r1) == q.project(r2);
}

int bivector_rank(const MultiVector& r) {
  int n = r.dim();
  RatMatrix m(n, n);
  for (auto& [b, c] : r.terms()) {
    auto idx = blade_indices(b);
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return static_cast<int>(rank(m));
}

NecessaryReport necessary_checks(const LieAlgebra& g, const Vec& r1, const Vec& r2) {
  NecessaryReport rep;
  int n = g.dim();
  auto m1 = bivector_from_coords(n, r1), m2 = bivector_from_coords(n, r2);
  rep.rank1 = bivector_rank(m1);
  rep.rank2 = bivector_rank(m2);
  auto rr1 = schouten(g, m1, m1), rr2 = schouten(g, m2, m2);
  rep.cybe1 = rr1.is_zero();
  rep.cybe2 = rr2.is_zero();
  rep.rr_orbit_dim1 = orbit_dim(g, rr1);
  rep.rr_orbit_dim2 = orbit_dim(g, rr2);
  if (rep.rank1 != rep.rank2) rep.reasons.push_back("bilinear ranks differ");
  if (rep.cybe1 != rep.cybe2) rep.reasons.push_back("exactly one of [r,r] vanishes");
  else if (rep.rr_orbit_dim1 != rep.rr_orbit_dim2) rep.reasons.push_back("[r,r] lie in orbits of different dimension");
  rep.provably_inequivalent = !rep.reasons.empty();
  return rep;
}

}  // namespace dlie
