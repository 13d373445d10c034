#include "properties.hpp"

#include "darbouxlie/classify.hpp"
#include "darbouxlie/derivations.hpp"
#include "darbouxlie/yangbaxter.hpp"

namespace dlie::testing {

Rational Rng::rational(int num, int den) {
  Rational q(uniform(-num, num), uniform(1, den));
  q.canonicalize();
  return q;
}

Vec Rng::vec(int n, int num, int den) {
  Vec v(n);
  for (auto& x : v) x = rational(num, den);
  return v;
}

MultiVector Rng::multivector(int n, int deg) {
  MultiVector w(n, deg);
  for (Blade b : blade_basis(n, deg))
    if (uniform(0, 2)) w.add(b, rational());
  return w;
}

LieAlgebra Rng::algebra() {
  const auto& fams = catalog_families();
  const auto& f = fams[uniform(0, static_cast<int>(fams.size()) - 1)];
  for (;;) {
    Params p;
    for (auto& name : catalog_param_names(f)) p[name] = rational(3, 3);
    try {
      return catalog(f, p);
    } catch (const ParamOutOfRange&) {
    }
  }
}

namespace {

int sgn(int e) { return e % 2 == 0 ? 1 : -1; }

std::string describe(const LieAlgebra& g, const MultiVector& a, const MultiVector& b) {
  return g.name() + ": P = " + to_string(a) + ", Q = " + to_string(b);
}

}  // namespace

PropertyResult schouten_graded_symmetry(std::size_t count, unsigned seed) {
  PropertyResult res{"Schouten graded symmetry"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto g = rng.algebra();
    int p = rng.uniform(1, 3), q = rng.uniform(1, 3);
    auto a = rng.multivector(4, p), b = rng.multivector(4, q);
    // [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]
    auto lhs = schouten(g, a, b);
    auto rhs = schouten(g, b, a).scaled(Rational(-sgn((p - 1) * (q - 1))));
    ++res.instances;
    if (lhs != rhs) res.fail(describe(g, a, b));
  }
  return res;
}

PropertyResult schouten_leibniz(std::size_t count, unsigned seed) {
  PropertyResult res{"Schouten Leibniz rule"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto g = rng.algebra();
    int p = rng.uniform(1, 2), q = rng.uniform(1, 2), s = rng.uniform(1, 2);
    auto a = rng.multivector(4, p), b = rng.multivector(4, q), c = rng.multivector(4, s);
    // [P, Q^R] = [P,Q]^R + (-1)^{(p-1)q} Q^[P,R]
    auto lhs = schouten(g, a, wedge(b, c));
    auto rhs = wedge(schouten(g, a, b), c) + wedge(b, schouten(g, a, c)).scaled(Rational(sgn((p - 1) * q)));
    ++res.instances;
    if (lhs != rhs) res.fail(describe(g, a, b) + ", R = " + to_string(c));
  }
  return res;
}

PropertyResult schouten_graded_jacobi(std::size_t count, unsigned seed) {
  PropertyResult res{"Schouten graded Jacobi"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto g = rng.algebra();
    int p = rng.uniform(1, 2), q = rng.uniform(1, 2), s = rng.uniform(1, 2);
    auto a = rng.multivector(4, p), b = rng.multivector(4, q), c = rng.multivector(4, s);
    // [P,[Q,R]] = [[P,Q],R] + (-1)^{(p-1)(q-1)} [Q,[P,R]]
    auto lhs = schouten(g, a, schouten(g, b, c));
    auto rhs = schouten(g, schouten(g, a, b), c) +
               schouten(g, b, schouten(g, a, c)).scaled(Rational(sgn((p - 1) * (q - 1))));
    ++res.instances;
    if (lhs != rhs) res.fail(describe(g, a, b) + ", R = " + to_string(c));
  }
  return res;
}

PropertyResult catalog_jacobi(std::size_t count, unsigned seed) {
  PropertyResult res{"Jacobi identity of catalog algebras"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto g = rng.algebra();
    ++res.instances;
    auto errs = validate(g);
    if (!errs.empty()) res.fail(g.name() + " " + format_params(g.params()) + ": " + errs.front());
    // and on random elements
    auto x = rng.vec(4), y = rng.vec(4), z = rng.vec(4);
    auto j = vec_add(vec_add(g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x))), g.bracket(z, g.bracket(x, y)));
    if (!is_zero(j)) res.fail(g.name() + ": Jacobi fails on random elements");
  }
  return res;
}

PropertyResult derivation_closure(std::size_t count, unsigned seed) {
  PropertyResult res{"derivations closed under commutator"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto g = rng.algebra();
    auto basis = derivation_basis(g);
    auto combo = [&] {
      RatMatrix d(4, 4);
      for (auto& b : basis) d = d + b * rng.rational();
      return d;
    };
    auto c = commutator(combo(), combo());
    std::vector<Vec> span;
    for (auto& b : basis) span.push_back(flatten(b));
    ++res.instances;
    if (!is_derivation(g, c) || !in_span(span, flatten(c))) res.fail(g.name() + " " + format_params(g.params()));
  }
  return res;
}

PropertyResult lift_is_homomorphism(std::size_t count, unsigned seed) {
  PropertyResult res{"lifted derivations respect commutators"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    RatMatrix a(4, 4), b(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        a(i, j) = rng.rational();
        b(i, j) = rng.rational();
      }
    int m = rng.uniform(1, 3);
    ++res.instances;
    if (lift_derivation(commutator(a, b), m) != commutator(lift_derivation(a, m), lift_derivation(b, m)))
      res.fail("degree " + std::to_string(m));
  }
  return res;
}

PropertyResult random_cocycle_identity(std::size_t count, unsigned seed) {
  PropertyResult res{"cocycle identity (random bivectors)"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto g = rng.algebra();
    auto r = rng.vec(6);
    ++res.instances;
    if (!cocycle_identity_holds(g, r)) res.fail(g.name() + ": r = " + to_string(bivector_from_coords(4, r)));
  }
  return res;
}

PropertyResult mcybe_consistency(std::size_t count, unsigned seed) {
  PropertyResult res{"mCYBE system agrees with the direct test"};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto g = rng.algebra();
    auto ys = yb_system(g);
    // sparse points hit the locus often enough to exercise both answers
    Vec r(6);
    for (auto& x : r) x = rng.uniform(0, 2) ? Rational(0) : rng.rational(2, 1);
    bool by_system = true, by_cybe = true;
    for (auto& f : ys.mcybe) by_system &= f.eval(r) == 0;
    for (auto& f : ys.cybe) by_cybe &= f.eval(r) == 0;
    ++res.instances;
    if (by_system != is_mcybe_solution(g, r) || by_cybe != is_cybe_solution(g, r))
      res.fail(g.name() + ": r = " + to_string(bivector_from_coords(4, r)));
  }
  return res;
}

PropertyResult table_cocycle_identity() {
  PropertyResult res{"cocycle identity (table representatives)"};
  for (auto& f : catalog_families()) {
    auto rep = verify_orbit_table(f);
    for (auto& x : rep.records) {
      ++res.instances;
      if (!x.cocycle) res.fail(f + " " + x.block + "/" + x.label);
    }
  }
  return res;
}

}  // namespace dlie::testing
