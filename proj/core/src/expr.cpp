#include "darbouxlie/expr.hpp"

#include <cctype>

namespace dlie {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Resolver& r) : s_(s), resolve_(r) {}

  Poly parse() {
    Poly p = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Poly sum() {
    Poly p;
    bool neg = false;
    if (peek('-') || peek('+')) neg = s_[i_++] == '-';
    p = term();
    if (neg) p = -p;
    while (peek('+') || peek('-')) {
      bool minus = s_[i_++] == '-';
      Poly t = term();
      if (minus)
        p -= t;
      else
        p += t;
    }
    return p;
  }

  Poly term() {
    Poly p = power();
    for (;;) {
      if (peek('*')) {
        ++i_;
        p = p * power();
      } else if (peek('/')) {
        ++i_;
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p *= Rational(1) / d.constant_term();
      } else if (starts_atom()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  Poly power() {
    Poly b = unary();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected integer exponent");
      b = b.pow(std::stoi(std::string(s_.substr(st, i_ - st))));
    }
    return b;
  }

  Poly unary() {
    if (peek('-')) {
      ++i_;
      return -unary();
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return atom();
  }

  Poly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly p = sum();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Poly(Rational(mpz_class(std::string(s_.substr(st, i_ - st)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      auto name = s_.substr(st, i_ - st);
      auto v = resolve_(name);
      if (!v) {
        i_ = st;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      return *v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Resolver& resolve_;
  std::size_t i_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Resolver& resolve) { return Parser(text, resolve).parse(); }

Poly parse_coordinate_poly(std::string_view text, const std::map<std::string, Rational>& params) {
  return parse_poly(text, [&](std::string_view name) -> std::optional<Poly> {
    if (auto it = params.find(std::string(name)); it != params.end()) return Poly(it->second);
    if (name.size() >= 2 && name[0] == 'x') {
      int v = 0;
      for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + (c - '0');
      }
      if (v >= 1 && v <= 64) return Poly::var(v - 1);
    }
    return std::nullopt;
  });
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t st = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      auto piece = trim(text.substr(st, i - st));
      if (!piece.empty()) out.push_back(piece);
      st = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace dlie
