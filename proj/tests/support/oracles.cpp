#include "oracles.hpp"

#include "darbouxlie/expr.hpp"

namespace dlie::testing {

namespace {

Rational r(const char* s) { return parse_rational(s); }

Params ab(const char* a, const char* b) { return {{"alpha", r(a)}, {"beta", r(b)}}; }
Params a_(const char* a) { return {{"alpha", r(a)}}; }

}  // namespace

Blade blade(const std::string& name) {
  auto w = parse_multivector(name, kMaxDim);
  return w.terms().begin()->first;
}

SymMultiVector sym_from_text(int n, const std::map<std::string, std::string>& coeffs, const Params& p) {
  SymMultiVector w;
  bool first = true;
  for (auto& [digits, text] : coeffs) {
    Blade b = blade("e" + digits);
    if (first) {
      w = SymMultiVector(n, blade_degree(b));
      first = false;
    }
    w.add(b, parse_coordinate_poly(text, p));
  }
  return w;
}

std::vector<MultiVector> blades(int n, const std::vector<std::string>& names) {
  std::vector<MultiVector> v;
  for (auto& s : names) v.push_back(MultiVector::blade(n, blade(s)));
  return v;
}

bool same_span(const std::vector<MultiVector>& a, const std::vector<MultiVector>& b) {
  if (a.empty() || b.empty()) {
    auto nz = [](const std::vector<MultiVector>& v) {
      for (auto& w : v)
        if (!w.is_zero()) return true;
      return false;
    };
    return !nz(a) && !nz(b);
  }
  int n = a[0].dim(), m = a[0].degree();
  std::size_t len = binomial(n, m);
  std::vector<Vec> va, vab;
  for (auto& w : a) va.push_back(w.coords());
  vab = va;
  for (auto& w : b) {
    if (w.degree() != m && !w.is_zero()) return false;
    vab.push_back(w.coords());
  }
  std::vector<Vec> vb(vab.begin() + static_cast<long>(va.size()), vab.end());
  auto ra = rank_of_vectors(va, len), rb = rank_of_vectors(vb, len);
  return ra == rb && ra == rank_of_vectors(vab, len);
}

std::vector<InvariantCase> invariant_cases() {
  std::vector<InvariantCase> cs;
  auto add = [&](std::string f, Params p, std::vector<std::string> i2, std::vector<std::string> i3) {
    cs.push_back({std::move(f), std::move(p), std::move(i2), std::move(i3)});
  };
  add("s1", {}, {"e12"}, {});
  add("s2", {}, {}, {});
  // s3: e12 iff alpha = -1, e13 iff beta = -1, e23 iff alpha + beta = 0; e123 iff alpha + beta = -1.
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"1/2", "1/3"},
                                                                       {"-1/2", "-1/2"},
                                                                       {"1", "-1"},
                                                                       {"1/2", "-1/2"},
                                                                       {"-1", "1/2"},
                                                                       {"-1", "1"},
                                                                       {"-2/3", "-1/3"},
                                                                       {"1", "1"},
                                                                       {"-1", "-1/2"},
                                                                       {"1", "-1/3"}}) {
    Rational al = r(a), be = r(b);
    std::vector<std::string> i2, i3;
    if (al == -1) i2.push_back("e12");
    if (be == -1) i2.push_back("e13");
    if (al + be == 0) i2.push_back("e23");
    if (al + be == -1) i3.push_back("e123");
    add("s3", ab(a, b), i2, i3);
  }
  for (const char* a : {"1", "-1", "-2", "1/2", "3"}) {
    Rational al = r(a);
    std::vector<std::string> i2, i3;
    if (al == -1) i2.push_back("e13");
    if (al == -2) i3.push_back("e123");
    add("s4", a_(a), i2, i3);
  }
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"1", "0"}, {"1", "-1/2"}, {"2", "1"}, {"1", "1/3"}, {"2", "-1"}, {"1/2", "0"}}) {
    Rational al = r(a), be = r(b);
    std::vector<std::string> i2, i3;
    if (be == 0) i2.push_back("e23");
    if (al + 2 * be == 0) i3.push_back("e123");
    add("s5", ab(a, b), i2, i3);
  }
  add("s6", {}, {}, {"e123"});
  add("s7", {}, {}, {"e123"});
  for (const char* a : {"-1/2", "1", "1/2", "1/3", "-1/3"}) {
    std::vector<std::string> i2;
    if (r(a) == r("-1/2")) i2.push_back("e13");
    add("s8", a_(a), i2, {});
  }
  for (const char* a : {"1", "2", "1/2"}) add("s9", a_(a), {}, {});
  add("s10", {}, {}, {});
  add("s11", {}, {}, {});
  add("s12", {}, {}, {});
  add("n1", {}, {"e12"}, {"e123", "e124"});
  return cs;
}

std::vector<RrCase> rr_cases() {
  return {
      {"s1",
       {},
       {{"123", "2*(-x2*x5 + x3*x4 - x4*x5)"}, {"124", "-2*x5^2"}, {"134", "2*(x3 - x5)*x6"}, {"234", "2*x5*x6"}}},
      {"s6",
       {},
       {{"123", "2*(x1*x6 + x2*x5 + x4^2)"}, {"124", "2*(x3 + x4)*x5"}, {"134", "2*(x4 - x3)*x6"}, {"234", "-4*x5*x6"}}},
      {"s7",
       {},
       {{"123", "2*(x4^2 + x1*x5 + x2*x6)"},
        {"124", "2*(x4*x5 + x3*x6)"},
        {"134", "2*(x4*x6 - x3*x5)"},
        {"234", "-2*(x5^2 + x6^2)"}}},
      {"s12",
       {},
       {{"123", "-2*(x2*x3 + x4*x5)"},
        {"124", "2*(-2*x1*x6 + x2*x5 - x3^2 - x3*x4 - x5^2)"},
        {"134", "-2*(x2 + x5)*x6"},
        {"234", "2*(x3 - x4)*x6"}}},
      {"n1",
       {},
       {{"123", "2*(x4*x5 - x2*x6)"}, {"124", "2*(x5^2 - x3*x6)"}, {"134", "2*x5*x6"}, {"234", "2*x6^2"}}},
      {"s3",
       ab("1/2", "-1/3"),
       {{"123", "2*((1 + alpha)*x1*x6 - (1 + beta)*x2*x5 + (alpha + beta)*x3*x4)"},
        {"124", "2*(alpha - 1)*x3*x5"},
        {"134", "2*(beta - 1)*x3*x6"},
        {"234", "2*(beta - alpha)*x5*x6"}}},
      {"s3",
       ab("-1", "1/2"),
       {{"123", "2*((1 + alpha)*x1*x6 - (1 + beta)*x2*x5 + (alpha + beta)*x3*x4)"},
        {"124", "2*(alpha - 1)*x3*x5"},
        {"134", "2*(beta - 1)*x3*x6"},
        {"234", "2*(beta - alpha)*x5*x6"}}},
      {"s8",
       a_("1/3"),
       {{"123", "2*((2 + alpha)*x1*x6 - (1 + 2*alpha)*x2*x5 + (1 + alpha)*x3*x4 + x4^2)"},
        {"124", "2*(x4 - alpha*x3)*x5"},
        {"134", "2*x6*(x4 - x3)"},
        {"234", "2*(alpha - 1)*x5*x6"}}},
      {"s8",
       a_("-1/2"),
       {{"123", "2*((2 + alpha)*x1*x6 - (1 + 2*alpha)*x2*x5 + (1 + alpha)*x3*x4 + x4^2)"},
        {"124", "2*(x4 - alpha*x3)*x5"},
        {"134", "2*x6*(x4 - x3)"},
        {"234", "2*(alpha - 1)*x5*x6"}}},
  };
}

GradingSolution s1_reference_grading() {
  GradingSolution s;
  s.alphas = {1, 1, 0, 0};
  s.center = {Vec{1, 0, 0, 0}};
  return s;
}

std::vector<RatMatrix> s1_reference_matrices() {
  std::vector<RatMatrix> m(4, RatMatrix(5, 5));
  // 1-based (row, col) as printed
  auto set = [&](int i, int row, int col, int v) { m[i](row - 1, col - 1) = v; };
  set(0, 1, 5, -1);
  set(1, 1, 4, -1);
  set(1, 2, 5, -1);
  set(2, 3, 4, -1);
  set(3, 1, 2, 1);
  set(3, 3, 3, 1);
  return m;
}

std::vector<BrickCase> brick_cases() {
  std::vector<BrickCase> v = {{"s1", {}, {"x5", "x6"}}, {"s6", {}, {"x5", "x6"}}};
  for (auto p : {ab("1", "1"), ab("1", "0"), ab("2", "-1"), ab("1/3", "2")}) v.push_back({"s5", p, {"x3"}});
  return v;
}

std::vector<RatMatrix> s1_reference_fields() {
  std::vector<RatMatrix> f(6, RatMatrix(6, 6));
  // X_k = sum_a (A p)_a d/dx_a; (row a, col b) is the coefficient of x_{b+1} in d/dx_{a+1}
  auto set = [&](int k, int a, int b, int v) { f[k](a - 1, b - 1) = v; };
  for (int a = 1; a <= 5; ++a) set(0, a, a, a == 1 ? 2 : 1);
  set(1, 2, 4, 1);
  set(1, 3, 5, 1);
  set(2, 1, 5, -1);
  set(2, 2, 6, -1);
  set(3, 1, 3, 1);
  set(3, 4, 6, -1);
  set(4, 2, 2, 1);
  set(4, 4, 4, 1);
  set(4, 6, 6, 1);
  set(5, 2, 3, 1);
  set(5, 4, 5, 1);
  return f;
}

std::vector<std::pair<std::string, Params>> catalog_samples() {
  std::vector<std::pair<std::string, Params>> v;
  for (auto& f : catalog_families()) {
    auto names = catalog_param_names(f);
    if (names.empty()) {
      v.push_back({f, {}});
    } else if (f == "s3") {
      for (auto p : {ab("1/2", "1/3"), ab("-1", "1"), ab("-2/3", "-1/3"), ab("1", "-1")}) v.push_back({f, p});
    } else if (f == "s5") {
      for (auto p : {ab("1", "0"), ab("2", "-1"), ab("1/3", "2")}) v.push_back({f, p});
    } else if (f == "s4") {
      for (auto p : {a_("1"), a_("-1"), a_("-2")}) v.push_back({f, p});
    } else if (f == "s8") {
      for (auto p : {a_("1"), a_("-1/2"), a_("1/3")}) v.push_back({f, p});
    } else {
      for (auto p : {a_("1"), a_("1/2")}) v.push_back({f, p});
    }
  }
  return v;
}

}  // namespace dlie::testing
