#include "darbouxlie/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dlie {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto ok = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!ok(num) || !ok(den) || den[0] == '-' || den[0] == '+') throw std::invalid_argument("bad rational '" + t + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int v, int e) {
  Monomial m;
  if (e > 0) m.p_.push_back({v, e});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : p_) d += e;
  return d;
}

int Monomial::exponent(int v) const {
  for (auto& [w, e] : p_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < p_.size() || j < o.p_.size()) {
    if (j == o.p_.size() || (i < p_.size() && p_[i].first < o.p_[j].first)) {
      r.p_.push_back(p_[i++]);
    } else if (i == p_.size() || o.p_[j].first < p_[i].first) {
      r.p_.push_back(o.p_[j++]);
    } else {
      r.p_.push_back({p_[i].first, p_[i].second + o.p_[j].second});
      ++i, ++j;
    }
  }
  return r;
}

Monomial Monomial::without(int v) const {
  Monomial r = *this;
  for (auto it = r.p_.begin(); it != r.p_.end(); ++it) {
    if (it->first == v) {
      if (--it->second == 0) r.p_.erase(it);
      return r;
    }
  }
  throw std::logic_error("Monomial::without: variable absent");
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // lexicographic with x1 > x2 > ...: the first variable where exponents differ decides
  std::size_t i = 0, j = 0;
  while (i < a.p_.size() || j < b.p_.size()) {
    int va = i < a.p_.size() ? a.p_[i].first : INT32_MAX;
    int vb = j < b.p_.size() ? b.p_[j].first : INT32_MAX;
    int v = std::min(va, vb);
    int ea = va == v ? a.p_[i].second : 0;
    int eb = vb == v ? b.p_[j].second : 0;
    if (ea != eb) return ea < eb;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return false;
}

std::string Monomial::str(const std::function<std::string(int)>& name) const {
  if (p_.empty()) return "1";
  std::string s;
  for (auto& [v, e] : p_) {
    if (!s.empty()) s += "*";
    s += name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string default_var_name(int v) { return "x" + std::to_string(v + 1); }

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

Poly Poly::var(int v) { return monomial(Monomial::var(v), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.t_.emplace(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rational Poly::constant_term() const { return coeff(Monomial()); }

Rational Poly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (auto& [m, c] : t_) {
    if (d >= 0 && m.degree() != d) return false;
    d = m.degree();
  }
  return true;
}

int Poly::max_var() const {
  int v = -1;
  for (auto& [m, c] : t_) v = std::max(v, m.max_var());
  return v;
}

std::vector<int> Poly::variables() const {
  std::set<int> s;
  for (auto& [m, c] : t_)
    for (auto& [v, e] : m.powers()) s.insert(v);
  return {s.begin(), s.end()};
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, k] : t_) k *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::diff(int v) const {
  Poly r;
  for (auto& [m, c] : t_) {
    int e = m.exponent(v);
    if (e > 0) r.add_term(m.without(v), c * e);
  }
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Rational Poly::eval(const std::map<int, Rational>& point) const {
  Rational s = 0;
  for (auto& [m, c] : t_) {
    Rational t = c;
    for (auto& [v, e] : m.powers()) {
      auto it = point.find(v);
      if (it == point.end()) throw MissingVariable(v);
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    s += t;
  }
  return s;
}

Rational Poly::eval(const Vec& point) const {
  Rational s = 0;
  for (auto& [m, c] : t_) {
    Rational t = c;
    for (auto& [v, e] : m.powers()) {
      if (v >= static_cast<int>(point.size())) throw MissingVariable(v);
      for (int k = 0; k < e; ++k) t *= point[v];
    }
    s += t;
  }
  return s;
}

Poly Poly::subs(const std::map<int, Poly>& s) const {
  Poly r;
  for (auto& [m, c] : t_) {
    Poly t(c);
    Monomial rest;
    for (auto& [v, e] : m.powers()) {
      auto it = s.find(v);
      if (it == s.end())
        rest = rest * Monomial::var(v, e);
      else
        t = t * it->second.pow(e);
    }
    r += t * Poly::monomial(rest, 1);
  }
  return r;
}

std::string Poly::str(const VarNamer& name) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : t_) {
    Rational a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (m.is_one())
      s += to_string(a);
    else if (a == 1)
      s += m.str(name);
    else
      s += to_string(a) + "*" + m.str(name);
  }
  return s;
}

std::vector<Monomial> monomials_up_to(const std::vector<int>& vars, int maxdeg) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (int d = 1; d <= maxdeg; ++d) {
    std::set<Monomial> next;
    for (auto& m : layer)
      for (int v : vars) next.insert(m * Monomial::var(v));
    layer.assign(next.begin(), next.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
  return m;
}

Vec RatMatrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec RatMatrix::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) m(i, j) += a * o(k, j);
    }
  return m;
}

Vec RatMatrix::operator*(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix/vector shape mismatch");
  Vec r(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  RatMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_.at(i);
  return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  RatMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_.at(i);
  return m;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
  RatMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

void RatMatrix::append_rows(const RatMatrix& o) {
  if (r_ == 0 && c_ == 0) c_ = o.c_;
  if (o.c_ != c_) throw std::invalid_argument("append_rows: column mismatch");
  a_.insert(a_.end(), o.a_.begin(), o.a_.end());
  r_ += o.r_;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const RatMatrix& in) {
  RrefResult out{in, {}};
  RatMatrix& m = out.m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank_of_vectors(const std::vector<Vec>& vs, std::size_t len) {
  if (vs.empty()) return 0;
  return rank(RatMatrix::from_rows(vs, len));
}

std::vector<Vec> kernel_basis(const RatMatrix& m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const RatMatrix& m, const Vec& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b.at(i);
  }
  auto [r, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, m.cols());
  return x;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

Vec vec_scale(const Vec& a, const Rational& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

// ---------------------------------------------------------------- ideal membership

std::optional<std::vector<Poly>> ideal_membership(const Poly& target, const std::vector<Poly>& gens, int bound,
                                                  const std::vector<int>& vars) {
  if (bound < 0) throw std::invalid_argument("cofactor degree bound must be >= 0");
  if (gens.empty()) {
    if (target.is_zero()) return std::vector<Poly>{};
    return std::nullopt;
  }
  auto cof = monomials_up_to(vars, bound);
  // unknown (g, m): coefficient of monomial m in cofactor of generator g
  std::map<Monomial, std::size_t> row_of;
  auto row = [&](const Monomial& m) {
    auto [it, fresh] = row_of.emplace(m, row_of.size());
    return it->second;
  };
  for (auto& [m, c] : target.terms()) row(m);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  for (auto& g : gens)
    for (auto& m : cof) {
      std::vector<std::pair<std::size_t, Rational>> col;
      for (auto& [gm, gc] : g.terms()) col.push_back({row(gm * m), gc});
      cols.push_back(std::move(col));
    }
  RatMatrix a(row_of.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [i, c] : cols[j]) a(i, j) += c;
  Vec b(row_of.size());
  for (auto& [m, c] : target.terms()) b[row_of[m]] = c;
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<Poly> out(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t k = 0; k < cof.size(); ++k) out[g] += Poly::monomial(cof[k], (*x)[g * cof.size() + k]);
  return out;
}

std::optional<std::vector<Poly>> ideal_membership(const Poly& target, const std::vector<Poly>& gens, int bound) {
  std::set<int> vs;
  for (int v : target.variables()) vs.insert(v);
  for (auto& g : gens)
    for (int v : g.variables()) vs.insert(v);
  return ideal_membership(target, gens, bound, std::vector<int>(vs.begin(), vs.end()));
}

}  // namespace dlie
