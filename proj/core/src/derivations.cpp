#include "darbouxlie/derivations.hpp"

namespace dlie {

bool is_derivation(const LieAlgebra& g, const RatMatrix& d) {
  int n = g.dim();
  if (static_cast<int>(d.rows()) != n || static_cast<int>(d.cols()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec lhs = d * g.bracket_basis(i, j);
      Vec rhs = vec_add(g.bracket(d.col(i), basis_vector(n, j)), g.bracket(basis_vector(n, i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

RatMatrix derivation_system(const LieAlgebra& g) {
  int n = g.dim();
  // unknown d(k,l) at column k*n + l; one row per (i<j, component k)
  auto var = [n](int k, int l) { return static_cast<std::size_t>(k * n + l); };
  int pairs = n * (n - 1) / 2;
  RatMatrix sys(static_cast<std::size_t>(pairs * n), static_cast<std::size_t>(n * n));
  std::size_t row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, row += n)
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          // d([e_i,e_j])_k = sum_l c(i,j,l) d(k,l)
          if (g.c(i, j, l) != 0) sys(row + k, var(k, l)) += g.c(i, j, l);
          // [d e_i, e_j]_k = sum_l d(l,i) c(l,j,k)
          if (g.c(l, j, k) != 0) sys(row + k, var(l, i)) -= g.c(l, j, k);
          // [e_i, d e_j]_k = sum_l d(l,j) c(i,l,k)
          if (g.c(i, l, k) != 0) sys(row + k, var(l, j)) -= g.c(i, l, k);
        }
      }
  return sys;
}

std::vector<RatMatrix> derivation_basis(const LieAlgebra& g) {
  int n = g.dim();
  auto var = [n](int k, int l) { return static_cast<std::size_t>(k * n + l); };
  RatMatrix sys = derivation_system(g);
  std::vector<RatMatrix> out;
  for (auto& v : kernel_basis(sys)) {
    RatMatrix d(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) d(k, l) = v[var(k, l)];
    out.push_back(std::move(d));
  }
  return out;
}

bool is_automorphism(const LieAlgebra& g, const RatMatrix& t) {
  int n = g.dim();
  if (static_cast<int>(t.rows()) != n || static_cast<int>(t.cols()) != n) return false;
  if (rank(t) != static_cast<std::size_t>(n)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t * g.bracket_basis(i, j) != g.bracket(t.col(i), t.col(j))) return false;
  return true;
}

void require_automorphism(const LieAlgebra& g, const RatMatrix& t) {
  if (!is_automorphism(g, t)) throw NotAnAutomorphism("matrix is not an automorphism of " + g.name() + ":\n" + t.str());
}

LinearVectorField lift(const RatMatrix& d, int m) { return {lift_derivation(d, m)}; }

std::vector<LinearVectorField> fundamental_fields(const LieAlgebra& g, int m) {
  std::vector<LinearVectorField> out;
  for (auto& d : derivation_basis(g)) out.push_back(lift(d, m));
  return out;
}

int rank_at(const std::vector<LinearVectorField>& fields, const Vec& p) {
  if (fields.empty()) return 0;
  std::vector<Vec> cols;
  for (auto& x : fields) cols.push_back(x.a * p);
  return static_cast<int>(rank_of_vectors(cols, p.size()));
}

int orbit_dim(const LieAlgebra& g, const MultiVector& w) {
  if (w.dim() != g.dim()) throw DimensionMismatch("orbit_dim: multivector dimension differs from algebra");
  if (w.is_zero()) return 0;
  return rank_at(fundamental_fields(g, w.degree()), w.coords());
}

Poly vf_apply(const LinearVectorField& x, const Poly& f) {
  Poly r;
  int N = static_cast<int>(x.size());
  if (f.max_var() >= N) throw DimensionMismatch("vf_apply: polynomial uses more variables than the field acts on");
  for (int a = 0; a < N; ++a) {
    Poly df = f.diff(a);
    if (df.is_zero()) continue;
    Poly comp;
    for (int b = 0; b < N; ++b)
      if (x.a(a, b) != 0) comp += Poly::var(b) * x.a(a, b);
    r += comp * df;
  }
  return r;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

Vec flatten(const RatMatrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

bool in_span(const std::vector<Vec>& span, const Vec& v) {
  if (span.empty()) return is_zero(v);
  return solve(RatMatrix::from_columns(span, v.size()), v).has_value();
}

}  // namespace dlie
