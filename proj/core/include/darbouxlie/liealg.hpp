#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "darbouxlie/exactmath.hpp"

namespace dlie {

constexpr int kMaxDim = 8;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParamOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, Rational>;

// Structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k, indices 0-based.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int dim, std::string name = "");

  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  const Params& params() const { return params_; }
  void set_name(std::string n) { name_ = std::move(n); }
  void set_params(Params p) { params_ = std::move(p); }

  const Rational& c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const Vec& v);
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& v, const Vec& w) const;
  // Matrix of ad_v: column j is [v, e_j].
  RatMatrix ad(const Vec& v) const;
  RatMatrix ad_basis(int i) const;
  bool is_abelian() const;

 private:
  int n_ = 0;
  std::string name_;
  Params params_;
  std::vector<Rational> c_;
};

Vec basis_vector(int n, int i);

// Human-readable list of antisymmetry and Jacobi violations; empty iff g is a Lie algebra.
std::vector<std::string> validate(const LieAlgebra& g);

std::vector<Vec> center(const LieAlgebra& g);

// Catalog of the real four-dimensional indecomposable Lie algebras: s1..s12, n1.
const std::vector<std::string>& catalog_families();
// Parameter names the family takes, in display order (alpha, beta).
std::vector<std::string> catalog_param_names(const std::string& family);
// Throws ParamOutOfRange (or std::invalid_argument for unknown family / missing params).
LieAlgebra catalog(const std::string& family, const Params& params = {});
// Same brackets without the range check (perturbation arguments step outside the range).
LieAlgebra catalog_unchecked(const std::string& family, const Params& params, bool checked = false);
// Non-fatal remarks about parameter choices (e.g. s3 with |alpha| = |beta| and alpha < beta).
std::vector<std::string> catalog_warnings(const std::string& family, const Params& params);

// Text format: "dim N" header, then lines "[i,j] = c1*e1 + c2*e2"; '#' comments.
LieAlgebra parse_algebra(const std::string& text, const std::string& name = "");
LieAlgebra load_algebra_file(const std::string& path);
std::string format_algebra(const LieAlgebra& g);

std::string basis_name(int i);  // "e1", ...

}  // namespace dlie
