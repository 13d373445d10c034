#include "darbouxlie/grassmann.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "darbouxlie/expr.hpp"

namespace dlie {

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // count pairs (i in a, j in b) with i > j
  int inv = 0;
  for (Blade bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    inv += std::popcount(a & ~((Blade(2) << j) - 1));
  }
  return (inv & 1) ? -1 : 1;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> v;
  for (; b; b &= b - 1) v.push_back(std::countr_zero(b));
  return v;
}

Blade blade_from_indices(const std::vector<int>& idx) {
  Blade b = 0;
  for (int i : idx) {
    if (i < 0 || i >= kMaxDim) throw DimensionMismatch("blade index out of range");
    if (b & (Blade(1) << i)) throw DimensionMismatch("repeated blade index");
    b |= Blade(1) << i;
  }
  return b;
}

std::string blade_digits(Blade b) {
  std::string s;
  for (int i : blade_indices(b)) s += std::to_string(i + 1);
  return s;
}

std::string blade_name(Blade b) { return b ? "e" + blade_digits(b) : "1"; }

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

namespace {

struct BasisCache {
  std::once_flag once;
  std::array<std::array<std::vector<Blade>, kMaxDim + 1>, kMaxDim + 1> basis;
  std::array<std::vector<int>, kMaxDim + 1> position;  // by blade mask
};

BasisCache& cache() {
  static BasisCache c;
  std::call_once(c.once, [] {
    for (int n = 0; n <= kMaxDim; ++n) {
      c.position[n].assign(std::size_t(1) << n, -1);
      for (int m = 0; m <= n; ++m) {
        std::vector<Blade> v;
        for (Blade b = 0; b < (Blade(1) << n); ++b)
          if (blade_degree(b) == m) v.push_back(b);
        std::sort(v.begin(), v.end(), BladeLess{});
        for (std::size_t i = 0; i < v.size(); ++i) c.position[n][v[i]] = static_cast<int>(i);
        c.basis[n][m] = std::move(v);
      }
    }
  });
  return c;
}

}  // namespace

const std::vector<Blade>& blade_basis(int n, int m) {
  if (n < 0 || n > kMaxDim || m < 0 || m > n) throw DimensionMismatch("no exterior power Lambda^" + std::to_string(m) + " in dim " + std::to_string(n));
  return cache().basis[n][m];
}

int blade_position(int n, Blade b) {
  if (n < 0 || n > kMaxDim || b >= (Blade(1) << n)) throw DimensionMismatch("blade outside the parent space");
  return cache().position[n][b];
}

MultiVector schouten_blades(const LieAlgebra& g, Blade a, Blade b) {
  int n = g.dim();
  auto xs = blade_indices(a), ys = blade_indices(b);
  int deg = static_cast<int>(xs.size() + ys.size()) - 1;
  MultiVector r(n, deg < 0 ? 0 : deg);
  if (xs.empty() || ys.empty()) return r;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      Vec br = g.bracket_basis(xs[i], ys[j]);
      if (is_zero(br)) continue;
      Blade xr = a & ~(Blade(1) << xs[i]);
      Blade yr = b & ~(Blade(1) << ys[j]);
      int s = wedge_sign(xr, yr);
      if (s == 0) continue;
      if ((i + j) & 1) s = -s;
      MultiVector rest = MultiVector::blade(n, xr | yr, Rational(s));
      r += wedge(MultiVector::vector(br), rest);
    }
  return r;
}

MultiVector ad_action(const LieAlgebra& g, const Vec& v, const MultiVector& w) {
  if (static_cast<int>(v.size()) != g.dim()) throw DimensionMismatch("ad_action: vector length differs from algebra dimension");
  return schouten(g, MultiVector::vector(v), w);
}

std::vector<MultiVector> invariants(const LieAlgebra& g, int m) {
  int n = g.dim();
  const auto& basis = blade_basis(n, m);
  std::size_t N = basis.size();
  std::size_t out_len = N;  // ad_{e_i} preserves degree
  RatMatrix big(n * out_len, N);
  for (int i = 0; i < n; ++i)
    for (std::size_t c = 0; c < N; ++c) {
      auto col = schouten_blades(g, Blade(1) << i, basis[c]).coords();
      for (std::size_t r = 0; r < out_len; ++r) big(i * out_len + r, c) = col[r];
    }
  std::vector<MultiVector> out;
  for (auto& v : kernel_basis(big)) out.push_back(MultiVector::from_coords(n, m, v));
  return out;
}

SymMultiVector generic_bivector(int n) {
  SymMultiVector r(n, 2);
  const auto& basis = blade_basis(n, 2);
  for (std::size_t a = 0; a < basis.size(); ++a) r.add(basis[a], Poly::var(static_cast<int>(a)));
  return r;
}

SymMultiVector to_sym(const MultiVector& w) {
  SymMultiVector r(w.dim(), w.degree());
  for (auto& [b, c] : w.terms()) r.add(b, Poly(c));
  return r;
}

MultiVector evaluate(const SymMultiVector& w, const Vec& point) {
  MultiVector r(w.dim(), w.degree());
  for (auto& [b, c] : w.terms()) r.add(b, c.eval(point));
  return r;
}

RatMatrix lift_group(const RatMatrix& t, int m) {
  int n = static_cast<int>(t.rows());
  if (t.cols() != t.rows()) throw DimensionMismatch("lift_group: matrix must be square");
  const auto& basis = blade_basis(n, m);
  RatMatrix out(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    MultiVector w = MultiVector::blade(n, 0);
    for (int i : blade_indices(basis[c])) w = wedge(w, MultiVector::vector(t.col(i)));
    auto col = w.coords();
    for (std::size_t r = 0; r < basis.size(); ++r) out(r, c) = col[r];
  }
  return out;
}

RatMatrix lift_derivation(const RatMatrix& d, int m) {
  int n = static_cast<int>(d.rows());
  if (d.cols() != d.rows()) throw DimensionMismatch("lift_derivation: matrix must be square");
  const auto& basis = blade_basis(n, m);
  RatMatrix out(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto idx = blade_indices(basis[c]);
    MultiVector acc(n, m);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      MultiVector w = MultiVector::blade(n, 0);
      for (std::size_t l = 0; l < idx.size(); ++l)
        w = wedge(w, l == k ? MultiVector::vector(d.col(idx[l])) : MultiVector::blade(n, Blade(1) << idx[l]));
      acc += w;
    }
    auto col = acc.coords();
    for (std::size_t r = 0; r < basis.size(); ++r) out(r, c) = col[r];
  }
  return out;
}

MultiVector apply(const RatMatrix& lifted, const MultiVector& w) {
  return MultiVector::from_coords(w.dim(), w.degree(), lifted * w.coords());
}

std::string to_string(const MultiVector& w) {
  Poly p;  // reuse polynomial rendering with one variable per blade position
  std::vector<Blade> order;
  for (auto& [b, c] : w.terms()) {
    p += Poly::var(static_cast<int>(order.size())) * c;
    order.push_back(b);
  }
  if (p.is_zero()) return "0";
  // Poly display order is x1 > x2 > ..., matching insertion (blade) order
  return p.str([&](int v) { return blade_name(order[v]); });
}

std::string to_string(const SymMultiVector& w, const VarNamer& name) {
  if (w.is_zero()) return "0";
  std::string s;
  for (auto& [b, c] : w.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str(name) + ")*" + blade_name(b);
  }
  return s;
}

MultiVector parse_multivector(std::string_view text, int n, const Params& params) {
  // blade names become variables indexed by mask
  Poly p = parse_poly(text, [&](std::string_view id) -> std::optional<Poly> {
    if (auto it = params.find(std::string(id)); it != params.end()) return Poly(it->second);
    if (id.size() >= 2 && id[0] == 'e') {
      std::vector<int> idx;
      for (char c : id.substr(1)) {
        if (c < '1' || c > '9') return std::nullopt;
        idx.push_back(c - '1');
      }
      for (int i : idx)
        if (i >= n) return std::nullopt;
      try {
        Blade b = blade_from_indices(idx);
        // e21 = -e12 etc.: sort with parity
        int inv = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t c = a + 1; c < idx.size(); ++c)
            if (idx[a] > idx[c]) ++inv;
        return Poly::var(static_cast<int>(b)) * Rational(inv & 1 ? -1 : 1);
      } catch (const DimensionMismatch&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  });
  if (p.is_zero()) return MultiVector(n, 0);
  if (p.degree() != 1 || p.constant_term() != 0) throw ParseError("'" + std::string(text) + "' is not a linear combination of blades");
  int deg = -1;
  MultiVector w;
  for (auto& [m, c] : p.terms()) {
    Blade b = static_cast<Blade>(m.powers().front().first);
    if (deg < 0) {
      deg = blade_degree(b);
      w = MultiVector(n, deg);
    } else if (blade_degree(b) != deg) {
      throw ParseError("'" + std::string(text) + "' mixes blades of different degree");
    }
    w.add(b, c);
  }
  return w;
}

Vec bivector_coords(const MultiVector& w) {
  if (w.is_zero()) return Vec(binomial(w.dim(), 2));
  if (w.degree() != 2) throw DimensionMismatch("expected a bivector");
  return w.coords();
}

MultiVector bivector_from_coords(int n, const Vec& x) { return MultiVector::from_coords(n, 2, x); }

}  // namespace dlie
