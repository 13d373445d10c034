#include "darbouxlie/centerext.hpp"

#include <cmath>

#include "darbouxlie/derivations.hpp"

namespace dlie {

RatMatrix grading_system(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.c(i, j, k) != 0) {
          Vec r(n);
          r[i] += 1;
          r[j] += 1;
          r[k] -= 1;
          rows.push_back(r);
        }
  if (rows.empty()) return RatMatrix(0, n);
  return RatMatrix::from_rows(rows, n);
}

namespace {

bool faithful_on_center(const std::vector<Vec>& z, const Vec& alphas) {
  if (z.empty()) return true;
  std::vector<Vec> scaled;
  for (auto& v : z) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * alphas[i];
    scaled.push_back(w);
  }
  return rank_of_vectors(scaled, alphas.size()) == z.size();
}

}  // namespace

bool grading_is_admissible(const LieAlgebra& g, const Vec& alphas) {
  if (static_cast<int>(alphas.size()) != g.dim()) return false;
  RatMatrix sys = grading_system(g);
  if (sys.rows() && !is_zero(sys * alphas)) return false;
  return faithful_on_center(center(g), alphas);
}

std::optional<GradingSolution> solve_grading(const LieAlgebra& g) {
  int n = g.dim();
  auto z = center(g);
  RatMatrix sys = grading_system(g);
  auto kb = kernel_basis(sys.rows() ? sys : RatMatrix(1, n));
  if (kb.empty()) {
    if (!z.empty()) return std::nullopt;
    return GradingSolution{Vec(n), z};
  }
  std::size_t f = kb.size();
  // each kernel vector has a 1 at its own free column, so |alpha| <= n bounds the free values too
  int box = n;
  if (std::pow(2.0 * box + 1, static_cast<double>(f)) > 2e6) box = 1;
  std::optional<Vec> best;
  int best_norm = 0;
  std::vector<int> y(f, -box);
  for (;;) {
    Vec a(n);
    for (std::size_t k = 0; k < f; ++k)
      if (y[k]) a = vec_add(a, vec_scale(kb[k], y[k]));
    bool in_box = true;
    int norm = 0;
    for (auto& x : a) {
      if (x.get_den() != 1 || abs(x) > n) in_box = false;
      else norm = std::max(norm, static_cast<int>(Rational(abs(x)).get_num().get_si()));
    }
    if (in_box && faithful_on_center(z, a) &&
        (!best || norm < best_norm || (norm == best_norm && a < *best))) {
      best = a;
      best_norm = norm;
    }
    std::size_t k = 0;
    while (k < f && y[k] == box) y[k++] = -box;
    if (k == f) break;
    ++y[k];
  }
  if (!best) return std::nullopt;
  return GradingSolution{*best, z};
}

LieAlgebra extended_algebra(const LieAlgebra& g, const Vec& alphas) {
  int n = g.dim();
  LieAlgebra h(n + 1, g.name() + "~");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = g.bracket_basis(i, j);
      v.push_back(0);
      h.set_bracket(i, j, v);
    }
  for (int i = 0; i < n; ++i) {
    Vec v(n + 1);
    v[i] = alphas.at(i);
    h.set_bracket(n, i, v);
  }
  return h;
}

MatrixRep build_rep(const LieAlgebra& g, const GradingSolution& sol) {
  int n = g.dim();
  if (n + 1 > kMaxDim) throw DimensionMismatch("extension of a " + std::to_string(n) + "-dimensional algebra exceeds the dimension cap");
  LieAlgebra h = extended_algebra(g, sol.alphas);
  MatrixRep rep;
  for (int i = 0; i < n; ++i) rep.matrices.push_back(h.ad_basis(i));
  return rep;
}

bool commutation_fidelity(const LieAlgebra& g, const MatrixRep& rep) {
  int n = g.dim();
  if (static_cast<int>(rep.matrices.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix want(rep.matrices[0].rows(), rep.matrices[0].cols());
      for (int k = 0; k < n; ++k)
        if (g.c(i, j, k) != 0) want = want + rep.matrices[k] * g.c(i, j, k);
      if (commutator(rep.matrices[i], rep.matrices[j]) != want) return false;
    }
  return true;
}

bool is_faithful(const MatrixRep& rep) {
  std::vector<Vec> flat;
  for (auto& m : rep.matrices) flat.push_back(flatten(m));
  if (flat.empty()) return true;
  return rank_of_vectors(flat, flat.front().size()) == rep.matrices.size();
}

}  // namespace dlie
