#include "darbouxlie/darboux.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dlie {

// ---------------------------------------------------------------- families

namespace {

std::vector<int> all_vars(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace

std::optional<DarbouxFamily> verify_family(const std::vector<LinearVectorField>& fields, const std::vector<Poly>& gens,
                                           int bound) {
  if (gens.empty()) return std::nullopt;
  if (bound < 0) throw std::invalid_argument("cofactor degree bound must be >= 0");
  DarbouxFamily fam;
  fam.generators = gens;
  auto vars = all_vars(fields.empty() ? 0 : fields.front().size());
  for (auto& x : fields) {
    std::vector<std::vector<Poly>> per_gen;
    for (auto& f : gens) {
      Poly xf = vf_apply(x, f);
      std::optional<std::vector<Poly>> cof;
      for (int b = 0; b <= bound && !cof; ++b) cof = ideal_membership(xf, gens, b, vars);
      if (!cof) return std::nullopt;
      for (auto& h : *cof)
        if (!h.is_constant()) fam.linear = false;
      per_gen.push_back(std::move(*cof));
    }
    fam.cofactors.push_back(std::move(per_gen));
  }
  return fam;
}

bool check_family(const std::vector<LinearVectorField>& fields, const DarbouxFamily& fam) {
  if (fam.cofactors.size() != fields.size()) return false;
  for (std::size_t x = 0; x < fields.size(); ++x) {
    if (fam.cofactors[x].size() != fam.generators.size()) return false;
    for (std::size_t j = 0; j < fam.generators.size(); ++j) {
      Poly sum;
      for (std::size_t i = 0; i < fam.generators.size(); ++i) sum += fam.cofactors[x][j][i] * fam.generators[i];
      if (sum != vf_apply(fields[x], fam.generators[j])) return false;
    }
  }
  return true;
}

DarbouxFamily family_sum(const std::vector<LinearVectorField>& fields, const DarbouxFamily& a, const DarbouxFamily& b,
                         int bound) {
  if (!check_family(fields, a) || !check_family(fields, b))
    throw IncompatibleFields("family_sum: a summand is not verified against the given fields");
  std::vector<Poly> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  gens = span_basis(gens);
  auto fam = verify_family(fields, gens, bound);
  // a sum of Darboux families is always a Darboux family; failure means a bug upstream
  if (!fam) throw std::logic_error("family_sum: union failed to verify");
  return *fam;
}

// ---------------------------------------------------------------- bricks

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// Characteristic polynomial coefficients c[0..n] (c[n] = 1) by Faddeev-LeVerrier.
Vec charpoly(const RatMatrix& a) {
  std::size_t n = a.rows();
  Vec c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    RatMatrix t = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += t(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::vector<Vec> intersect(const std::vector<Vec>& span, const RatMatrix& m) {
  // vectors S y with m S y = 0
  if (span.empty()) return {};
  std::size_t n = span.front().size();
  RatMatrix s = RatMatrix::from_columns(span, n);
  std::vector<Vec> out;
  for (auto& y : kernel_basis(m * s)) out.push_back(s * y);
  return out;
}

}  // namespace

std::vector<Rational> rational_eigenvalues(const RatMatrix& a) {
  Vec c = charpoly(a);
  std::size_t lo = 0;
  std::vector<Rational> roots;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) roots.push_back(0);
  if (lo + 1 >= c.size()) return roots;
  mpz_class l = 1;
  for (std::size_t i = lo; i < c.size(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (std::size_t i = lo; i < c.size(); ++i) z.push_back(mpz_class(c[i] * l));
  auto eval = [&](const Rational& x) {
    Rational s = 0;
    for (std::size_t i = z.size(); i-- > 0;) s = s * x + z[i];
    return s;
  };
  for (auto& p : divisors(z.front()))
    for (auto& q : divisors(z.back()))
      for (int sg : {1, -1}) {
        Rational x(p * sg, q);
        x.canonicalize();
        if (eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Brick> find_bricks(const std::vector<LinearVectorField>& fields) {
  if (fields.empty()) return {};
  std::size_t n = fields.front().size();
  struct Piece {
    std::vector<Vec> span;
    std::vector<Rational> eig;
  };
  std::vector<Piece> pieces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      full.push_back(e);
    }
    pieces.push_back({full, {}});
  }
  for (auto& x : fields) {
    RatMatrix at = x.a.transpose();
    std::vector<Piece> next;
    for (auto& lam : rational_eigenvalues(at)) {
      RatMatrix shifted = at - RatMatrix::identity(n) * lam;
      for (auto& pc : pieces) {
        auto sp = intersect(pc.span, shifted);
        if (sp.empty()) continue;
        auto eig = pc.eig;
        eig.push_back(lam);
        next.push_back({sp, eig});
      }
    }
    pieces = std::move(next);
  }
  std::vector<Brick> out;
  for (auto& pc : pieces) {
    auto [r, piv] = rref(RatMatrix::from_rows(pc.span, n));
    for (std::size_t k = 0; k < piv.size(); ++k) {
      Poly l;
      for (std::size_t j = 0; j < n; ++j) l += Poly::var(static_cast<int>(j)) * r(k, j);
      out.push_back({primitive(l), pc.eig});
    }
  }
  std::sort(out.begin(), out.end(), [](const Brick& a, const Brick& b) {
    return grlex_less(b.poly.terms().begin()->first, a.poly.terms().begin()->first);
  });
  return out;
}

// ---------------------------------------------------------------- loci

std::string to_string(const Inequality& q, const VarNamer& name) {
  const char* op = q.sign == SignCond::NonZero ? " != 0" : q.sign == SignCond::Positive ? " > 0" : " < 0";
  return q.poly.str(name) + op;
}

bool holds(const Inequality& q, const Vec& p) {
  Rational v = q.poly.eval(p);
  switch (q.sign) {
    case SignCond::NonZero: return v != 0;
    case SignCond::Positive: return v > 0;
    case SignCond::Negative: return v < 0;
  }
  return false;
}

bool locus_contains(const TreeBranch& b, const Vec& p) {
  for (auto& e : b.equalities)
    if (e.eval(p) != 0) return false;
  for (auto& q : b.inequalities)
    if (!holds(q, p)) return false;
  return true;
}

std::vector<Vec> sample_locus(const std::vector<Poly>& eqs, const std::vector<Inequality>& ineqs, int nvars,
                              int per_pattern, int trials, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1), val(0, 3);
  static const int vals[4] = {-2, -1, 1, 2};
  // per equation, the variables it is linear in, with the matching partial derivative
  std::vector<std::vector<std::pair<int, Poly>>> solvable(eqs.size());
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (int v : eqs[e].variables()) {
      bool lin = true;
      for (auto& [m, c] : eqs[e].terms())
        if (m.exponent(v) > 1) lin = false;
      if (lin) solvable[e].push_back({v, eqs[e].diff(v)});
    }
  std::map<std::vector<int>, int> per;
  std::set<Vec> seen;
  std::vector<Vec> out;
  for (int t = 0; t < trials; ++t) {
    Vec x(nvars);
    for (int i = 0; i < nvars; ++i) x[i] = coin(rng) ? Rational(0) : Rational(vals[val(rng)]);
    std::vector<bool> locked(nvars, false);
    bool ok = false;
    for (int pass = 0; pass < 6 && !ok; ++pass) {
      ok = true;
      for (std::size_t e = 0; e < eqs.size(); ++e) {
        Rational r = eqs[e].eval(x);
        if (r == 0) continue;
        ok = false;
        // prefer a variable no other equation has fixed yet
        int best = -1;
        Rational c;
        for (int round = 0; round < 2 && best < 0; ++round)
          for (auto& [v, d] : solvable[e]) {
            if (round == 0 && locked[v]) continue;
            Rational cv = d.eval(x);
            if (cv != 0) {
              best = v;
              c = cv;
              break;
            }
          }
        if (best < 0) break;
        x[best] -= r / c;
        locked[best] = true;
      }
    }
    if (!ok) {
      ok = true;
      for (auto& e : eqs)
        if (e.eval(x) != 0) ok = false;
    }
    if (!ok) continue;
    bool good = true;
    std::vector<int> pattern;
    for (auto& q : ineqs) {
      if (!holds(q, x)) {
        good = false;
        break;
      }
      pattern.push_back(sgn(q.poly.eval(x)));
    }
    if (!good || seen.count(x)) continue;
    seen.insert(x);
    if (per[pattern] >= per_pattern) continue;
    ++per[pattern];
    out.push_back(x);
  }
  return out;
}

bool flow_invariant(const LinearVectorField& x, const std::vector<Poly>& gens, const Vec& p, int order) {
  std::size_t n = p.size();
  const int t = static_cast<int>(n) + 1;  // the curve parameter, outside the coordinate range
  std::vector<Poly> curve(n);
  Vec term = p;
  Rational fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      term = x.a * term;
      fact *= k;
    }
    Poly tk = Poly::var(t).pow(k) * (Rational(1) / fact);
    for (std::size_t a = 0; a < n; ++a)
      if (term[a] != 0) curve[a] += tk * term[a];
  }
  std::map<int, Poly> sub;
  for (std::size_t a = 0; a < n; ++a) sub[static_cast<int>(a)] = curve[a];
  for (auto& f : gens) {
    Poly ft = f.subs(sub);
    for (auto& [m, c] : ft.terms())
      if (m.degree() <= order) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> certify_empty(const std::vector<Poly>& eqs,
                                                      const std::vector<Inequality>& ineqs, int bound) {
  std::size_t m = ineqs.size();
  if (m > 12) m = 12;
  std::vector<unsigned> subsets;
  for (unsigned s = 1; s < (1u << m); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  // inhomogeneous generators can cancel in top degree, so their cofactors are not degree-bounded
  bool homogeneous = std::all_of(eqs.begin(), eqs.end(), [](const Poly& f) { return f.is_homogeneous(); });
  auto cap = [&](int deg) { return homogeneous ? std::min(bound, std::max(0, deg - 1)) : bound; };
  for (unsigned s : subsets) {
    Poly prod(1);
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (1u << i)) {
        prod = prod * ineqs[i].poly;
        used.push_back(i);
      }
    if (ideal_membership(prod, eqs, cap(prod.degree()))) return used;
  }
  // a product vanishing nowhere on the branch has a nonvanishing square too
  for (unsigned s : subsets) {
    Poly prod(1);
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (1u << i)) {
        prod = prod * ineqs[i].poly;
        used.push_back(i);
      }
    if (prod.degree() > 2) continue;
    Poly sq = prod * prod;
    if (ideal_membership(sq, eqs, cap(sq.degree()))) return used;
  }
  return std::nullopt;
}

std::string to_string(BranchStatus s) {
  switch (s) {
    case BranchStatus::Pass: return "pass";
    case BranchStatus::NoSolutions: return "no-solutions";
    case BranchStatus::Unconfirmed: return "unconfirmed";
    case BranchStatus::Fail: return "FAIL";
  }
  return "?";
}

namespace {

std::vector<Poly> branch_generators(const TreeBranch& b, const YbSystem& ys) {
  std::vector<Poly> gens = b.equalities;
  gens.insert(gens.end(), ys.mcybe.begin(), ys.mcybe.end());
  return span_basis(gens);
}

}  // namespace

BranchReport verify_branch(const LieAlgebra& g, const TreeBranch& branch, const std::vector<Vec>& given,
                           std::optional<int> expected_dim) {
  return verify_branch(g, fundamental_fields(g, 2), branch, given, expected_dim);
}

BranchReport verify_branch(const LieAlgebra& g, const std::vector<LinearVectorField>& fields, const TreeBranch& branch,
                           const std::vector<Vec>& given, std::optional<int> expected_dim) {
  BranchReport rep;
  rep.label = branch.label;
  auto ys = yb_system(g);
  auto gens = branch_generators(branch, ys);
  int nv = binomial(g.dim(), 2);

  if (gens.empty()) {
    rep.family_ok = true;
    rep.family_linear = true;
  } else if (auto fam = verify_family(fields, gens, 2)) {
    rep.family_ok = check_family(fields, *fam);
    rep.family_linear = fam->linear;
    if (!rep.family_ok) rep.failures.push_back("cofactor table failed re-check");
  } else {
    rep.failures.push_back("equalities + mCYBE do not form a polynomial Darboux family (cofactor degree <= 2)");
  }

  std::vector<Vec> samples;
  for (auto& p : given) {
    if (!locus_contains(branch, p)) {
      rep.failures.push_back("supplied sample outside the branch locus");
      continue;
    }
    samples.push_back(p);
  }
  for (auto& p : sample_locus(gens, branch.inequalities, nv))
    if (std::find(samples.begin(), samples.end(), p) == samples.end()) samples.push_back(p);
  rep.samples = samples.size();
  if (samples.empty()) rep.failures.push_back("no sample points found on the branch");

  std::set<int> distinct;
  for (auto& p : samples) {
    int r = rank_at(fields, p);
    rep.ranks.push_back(r);
    distinct.insert(r);
    if (!is_mcybe_solution(g, p)) rep.failures.push_back("sample is not an mCYBE solution");
    for (auto& x : fields)
      if (!gens.empty() && !flow_invariant(x, gens, p)) {
        rep.flow_ok = false;
        rep.failures.push_back("flow invariance fails at a sample");
        break;
      }
  }
  if (distinct.size() > 1) rep.failures.push_back("rank of M(p) is not constant on the samples");
  if (expected_dim && !distinct.empty() && (distinct.size() != 1 || *distinct.begin() != *expected_dim))
    rep.failures.push_back("rank " + std::to_string(*distinct.rbegin()) + " differs from expected dimension " +
                           std::to_string(*expected_dim));
  rep.status = rep.failures.empty() ? BranchStatus::Pass : BranchStatus::Fail;
  return rep;
}

BranchReport verify_empty_branch(const LieAlgebra& g, const TreeBranch& branch) {
  BranchReport rep;
  rep.label = branch.label;
  auto ys = yb_system(g);
  auto gens = branch_generators(branch, ys);
  // over the reals a vanishing sum of squares forces each linear form to vanish
  if (certify_empty(gens, branch.inequalities) || certify_empty(simplify_real_locus(gens), branch.inequalities)) {
    rep.status = BranchStatus::NoSolutions;
    return rep;
  }
  auto pts = sample_locus(gens, branch.inequalities, binomial(g.dim(), 2), 1, 1500);
  rep.samples = pts.size();
  if (!pts.empty()) {
    rep.status = BranchStatus::Fail;
    rep.failures.push_back("branch marked empty contains mCYBE solutions");
  } else {
    rep.status = BranchStatus::Unconfirmed;
    rep.failures.push_back("emptiness not derivable by ideal membership; no points found");
  }
  return rep;
}

}  // namespace dlie
