#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dlie {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q"; throws std::invalid_argument.
Rational parse_rational(std::string_view s);

struct MissingVariable : std::runtime_error {
  int var;
  explicit MissingVariable(int v)
      : std::runtime_error("missing value for variable x" + std::to_string(v + 1)), var(v) {}
};

// Sparse exponent vector: sorted (variable, exponent) pairs, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int v, int e = 1);

  int degree() const;
  int exponent(int v) const;
  const std::vector<std::pair<int, int>>& powers() const { return p_; }
  bool is_one() const { return p_.empty(); }
  int max_var() const { return p_.empty() ? -1 : p_.back().first; }

  Monomial operator*(const Monomial& o) const;
  // Divides out one power of v; requires exponent(v) > 0.
  Monomial without(int v) const;

  // Graded order, then lexicographic with x1 > x2 > ...
  friend bool grlex_less(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return p_ == o.p_; }
  bool operator<(const Monomial& o) const { return grlex_less(o, *this); }  // descending display order

  std::string str(const std::function<std::string(int)>& name) const;

 private:
  std::vector<std::pair<int, int>> p_;
};

using VarNamer = std::function<std::string(int)>;
std::string default_var_name(int v);  // x1, x2, ...

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}
  static Poly var(int v);
  static Poly monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  int max_var() const;
  std::vector<int> variables() const;
  const std::map<Monomial, Rational>& terms() const { return t_; }
  Rational coeff(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const { return *this * Rational(-1); }
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly diff(int v) const;
  Poly pow(int e) const;
  // Missing variables throw MissingVariable.
  Rational eval(const std::map<int, Rational>& point) const;
  Rational eval(const Vec& point) const;
  // Substitutes polynomials for variables (vars absent from the map stay).
  Poly subs(const std::map<int, Poly>& s) const;

  std::string str(const VarNamer& name = default_var_name) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> t_;
};

std::vector<Monomial> monomials_up_to(const std::vector<int>& vars, int maxdeg);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  RatMatrix operator*(const RatMatrix& o) const;
  Vec operator*(const Vec& v) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const Rational& s) const;
  RatMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const RatMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }
  // Appends the rows of o below this one (same column count).
  void append_rows(const RatMatrix& o);

  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  RatMatrix m;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank_of_vectors(const std::vector<Vec>& vs, std::size_t len);
// Basis of {v : m v = 0}; one vector per free column, free entry = 1.
std::vector<Vec> kernel_basis(const RatMatrix& m);
// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const RatMatrix& m, const Vec& b);
bool is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rational& s);

// target = sum_i h_i * gens_i with deg h_i <= bound; nullopt when impossible.
std::optional<std::vector<Poly>> ideal_membership(const Poly& target, const std::vector<Poly>& gens,
                                                  int cofactor_degree_bound);

// Same as ideal_membership, but the unknown cofactors may only use variables in `vars`.
std::optional<std::vector<Poly>> ideal_membership(const Poly& target, const std::vector<Poly>& gens,
                                                  int cofactor_degree_bound, const std::vector<int>& vars);

}  // namespace dlie
