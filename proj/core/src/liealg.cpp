#include "darbouxlie/liealg.hpp"

#include <fstream>
#include <sstream>

#include "darbouxlie/expr.hpp"

namespace dlie {

LieAlgebra::LieAlgebra(int dim, std::string name) : n_(dim), name_(std::move(name)) {
  if (dim < 1 || dim > kMaxDim)
    throw DimensionMismatch("dimension " + std::to_string(dim) + " outside 1.." + std::to_string(kMaxDim));
  c_.assign(static_cast<std::size_t>(n_) * n_ * n_, Rational(0));
}

void LieAlgebra::set_bracket(int i, int j, const Vec& v) {
  if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("bracket vector has wrong length");
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw DimensionMismatch("basis index out of range");
  for (int k = 0; k < n_; ++k) {
    c_[(i * n_ + j) * n_ + k] = v[k];
    c_[(j * n_ + i) * n_ + k] = -v[k];
  }
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec r(n_);
  for (int k = 0; k < n_; ++k) r[k] = c(i, j, k);
  return r;
}

Vec LieAlgebra::bracket(const Vec& v, const Vec& w) const {
  if (static_cast<int>(v.size()) != n_ || static_cast<int>(w.size()) != n_)
    throw DimensionMismatch("bracket: vectors must have length " + std::to_string(n_));
  Vec r(n_);
  for (int i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (w[j] == 0 || i == j) continue;
      Rational f = v[i] * w[j];
      for (int k = 0; k < n_; ++k)
        if (c(i, j, k) != 0) r[k] += f * c(i, j, k);
    }
  }
  return r;
}

RatMatrix LieAlgebra::ad(const Vec& v) const {
  RatMatrix m(n_, n_);
  for (int j = 0; j < n_; ++j) {
    Vec col = bracket(v, basis_vector(n_, j));
    for (int i = 0; i < n_; ++i) m(i, j) = col[i];
  }
  return m;
}

RatMatrix LieAlgebra::ad_basis(int i) const { return ad(basis_vector(n_, i)); }

bool LieAlgebra::is_abelian() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

Vec basis_vector(int n, int i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

std::string basis_name(int i) { return "e" + std::to_string(i + 1); }

std::vector<std::string> validate(const LieAlgebra& g) {
  std::vector<std::string> out;
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k))
          out.push_back("antisymmetry fails for [" + basis_name(i) + "," + basis_name(j) + "] component " +
                        basis_name(k));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m)
            s += g.c(i, j, m) * g.c(m, k, l) + g.c(j, k, m) * g.c(m, i, l) + g.c(k, i, m) * g.c(m, j, l);
          if (s != 0)
            out.push_back("Jacobi fails on (" + basis_name(i) + "," + basis_name(j) + "," + basis_name(k) +
                          ") component " + basis_name(l) + ": " + to_string(s));
        }
  return out;
}

std::vector<Vec> center(const LieAlgebra& g) {
  int n = g.dim();
  // v is central iff [v, e_j] = 0 for all j: stack the linear maps v -> [v, e_j]
  RatMatrix m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m(j * n + k, i) = g.c(i, j, k);
  return kernel_basis(m);
}

// ---------------------------------------------------------------- catalog

namespace {

struct FamilyDef {
  std::vector<std::string> params;
  // brackets [e_i,e_j] for (12,13,14,23,24,34) as expressions in e1..e4 and the parameters
  std::vector<std::string> brackets;
};

const std::map<std::string, FamilyDef>& families() {
  static const std::map<std::string, FamilyDef> f = {
      {"s1", {{}, {"0", "0", "0", "0", "-e1", "-e3"}}},
      {"s2", {{}, {"0", "0", "-e1", "0", "-e1 - e2", "-e2 - e3"}}},
      {"s3", {{"alpha", "beta"}, {"0", "0", "-e1", "0", "-alpha*e2", "-beta*e3"}}},
      {"s4", {{"alpha"}, {"0", "0", "-e1", "0", "-e1 - e2", "-alpha*e3"}}},
      {"s5", {{"alpha", "beta"}, {"0", "0", "-alpha*e1", "0", "-beta*e2 + e3", "-e2 - beta*e3"}}},
      {"s6", {{}, {"0", "0", "0", "e1", "-e2", "e3"}}},
      {"s7", {{}, {"0", "0", "0", "e1", "e3", "-e2"}}},
      {"s8", {{"alpha"}, {"0", "0", "-(1 + alpha)*e1", "e1", "-e2", "-alpha*e3"}}},
      {"s9", {{"alpha"}, {"0", "0", "-2*alpha*e1", "e1", "-alpha*e2 + e3", "-e2 - alpha*e3"}}},
      {"s10", {{}, {"0", "0", "-2*e1", "e1", "-e2", "-e2 - e3"}}},
      {"s11", {{}, {"0", "0", "-e1", "e1", "-e2", "0"}}},
      {"s12", {{}, {"0", "-e1", "e2", "-e2", "-e1", "0"}}},
      {"n1", {{}, {"0", "0", "0", "0", "e1", "e2"}}},
  };
  return f;
}

void check_range(const std::string& fam, const Params& p) {
  auto bad = [&](const std::string& why) { throw ParamOutOfRange(fam + ": " + why); };
  auto get = [&](const char* k) { return p.at(k); };
  if (fam == "s3") {
    Rational a = get("alpha"), b = get("beta");
    if (!(b != 0 && abs(b) <= abs(a) && abs(a) <= 1)) bad("requires 0 < |beta| <= |alpha| <= 1");
    if (a == -1 && b == -1) bad("(alpha, beta) = (-1, -1) is excluded");
  } else if (fam == "s4") {
    if (get("alpha") == 0) bad("requires alpha != 0");
  } else if (fam == "s5") {
    if (get("alpha") <= 0) bad("requires alpha > 0");
  } else if (fam == "s8") {
    Rational a = get("alpha");
    if (!(a > -1 && a <= 1 && a != 0)) bad("requires alpha in (-1, 1] \\ {0}");
  } else if (fam == "s9") {
    if (get("alpha") <= 0) bad("requires alpha > 0");
  }
}

}  // namespace

const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> f = {"s1", "s2", "s3", "s4",  "s5",  "s6", "s7",
                                             "s8", "s9", "s10", "s11", "s12", "n1"};
  return f;
}

std::vector<std::string> catalog_param_names(const std::string& family) {
  auto it = families().find(family);
  if (it == families().end()) throw std::invalid_argument("unknown algebra family '" + family + "'");
  return it->second.params;
}

LieAlgebra catalog(const std::string& family, const Params& params) { return catalog_unchecked(family, params, true); }

LieAlgebra catalog_unchecked(const std::string& family, const Params& params, bool checked) {
  auto it = families().find(family);
  if (it == families().end()) throw std::invalid_argument("unknown algebra family '" + family + "'");
  const FamilyDef& def = it->second;
  Params used;
  for (auto& name : def.params) {
    auto p = params.find(name);
    if (p == params.end()) throw std::invalid_argument(family + ": missing parameter '" + name + "'");
    used[name] = p->second;
  }
  for (auto& [k, v] : params)
    if (!used.count(k)) throw std::invalid_argument(family + ": unexpected parameter '" + k + "'");
  if (checked) check_range(family, used);

  LieAlgebra g(4, family);
  g.set_params(used);
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int a = 0; a < 6; ++a) {
    Poly p = parse_poly(def.brackets[a], [&](std::string_view id) -> std::optional<Poly> {
      if (auto u = used.find(std::string(id)); u != used.end()) return Poly(u->second);
      if (id.size() == 2 && id[0] == 'e' && id[1] >= '1' && id[1] <= '4') return Poly::var(id[1] - '1');
      return std::nullopt;
    });
    Vec v(4);
    for (int k = 0; k < 4; ++k) v[k] = p.coeff(Monomial::var(k));
    g.set_bracket(pairs[a][0], pairs[a][1], v);
  }
  return g;
}

std::vector<std::string> catalog_warnings(const std::string& family, const Params& params) {
  std::vector<std::string> w;
  if (family == "s3") {
    auto a = params.find("alpha"), b = params.find("beta");
    if (a != params.end() && b != params.end() && abs(a->second) == abs(b->second) && a->second < b->second)
      w.push_back("s3 with |alpha| = |beta| and alpha < beta: the classification uses alpha >= beta");
  }
  return w;
}

// ---------------------------------------------------------------- text format

LieAlgebra parse_algebra(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<LieAlgebra> g;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("dim", 0) == 0) {
      if (g) fail("duplicate dim header");
      int n = 0;
      try {
        n = std::stoi(t.substr(3));
      } catch (const std::exception&) {
        fail("bad dim header");
      }
      if (n < 1 || n > kMaxDim) fail("dim must be in 1.." + std::to_string(kMaxDim));
      g.emplace(n, name);
      continue;
    }
    if (!g) fail("missing 'dim N' header before brackets");
    if (t[0] != '[') fail("expected '[i,j] = ...'");
    auto close = t.find(']');
    auto eq = t.find('=');
    if (close == std::string::npos || eq == std::string::npos || eq < close) fail("expected '[i,j] = ...'");
    auto idx = split_top(std::string_view(t).substr(1, close - 1), ',');
    if (idx.size() != 2) fail("expected two indices");
    int i = 0, j = 0;
    try {
      i = std::stoi(idx[0]) - 1;
      j = std::stoi(idx[1]) - 1;
    } catch (const std::exception&) {
      fail("bad index");
    }
    int n = g->dim();
    if (i < 0 || j < 0 || i >= n || j >= n) fail("index out of range");
    if (i == j) fail("[e_i, e_i] is always zero");
    Poly p;
    try {
      p = parse_poly(std::string_view(t).substr(eq + 1), [&](std::string_view id) -> std::optional<Poly> {
        if (id.size() >= 2 && id[0] == 'e') {
          int k = 0;
          for (char c : id.substr(1)) {
            if (c < '0' || c > '9') return std::nullopt;
            k = k * 10 + (c - '0');
          }
          if (k >= 1 && k <= n) return Poly::var(k - 1);
        }
        return std::nullopt;
      });
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (p.degree() > 1 || p.constant_term() != 0)
      fail("right-hand side must be a linear combination of basis vectors");
    Vec v(n);
    for (int k = 0; k < n; ++k) v[k] = p.coeff(Monomial::var(k));
    g->set_bracket(i, j, v);
  }
  if (!g) throw ParseError("missing 'dim N' header");
  return *g;
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open algebra file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  std::string name = path;
  if (auto s = name.find_last_of('/'); s != std::string::npos) name = name.substr(s + 1);
  if (auto d = name.rfind('.'); d != std::string::npos) name = name.substr(0, d);
  return parse_algebra(ss.str(), name);
}

std::string format_algebra(const LieAlgebra& g) {
  std::ostringstream os;
  os << "dim " << g.dim() << "\n";
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Vec v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      Poly p;
      for (int k = 0; k < g.dim(); ++k) p += Poly::var(k) * v[k];
      os << "[" << i + 1 << "," << j + 1 << "] = " << p.str(basis_name) << "\n";
    }
  return os.str();
}

}  // namespace dlie
