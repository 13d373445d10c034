#include "darbouxlie/golden.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "darbouxlie/expr.hpp"
#include "darbouxlie/grassmann.hpp"

#ifndef DARBOUXLIE_DATA_DIR
#define DARBOUXLIE_DATA_DIR "data"
#endif

namespace dlie {

namespace {

Rational param_value(std::string_view text, const Params& p) {
  Poly v = parse_coordinate_poly(text, p);
  if (!v.is_constant()) throw ParseError("'" + std::string(text) + "' does not evaluate to a number");
  return v.constant_term();
}

// Splits on a two-character operator outside parentheses.
std::vector<std::string> split_op(std::string_view s, std::string_view op) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t st = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s.substr(i, op.size()) == op) {
      out.push_back(trim(s.substr(st, i - st)));
      st = i + op.size();
      i += op.size() - 1;
    }
  }
  out.push_back(trim(s.substr(st)));
  return out;
}

bool eval_atom(const std::string& a, const Params& p) {
  static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
  for (const char* op : ops) {
    auto pos = a.find(op);
    if (pos == std::string::npos) continue;
    Rational l = param_value(std::string_view(a).substr(0, pos), p);
    Rational r = param_value(std::string_view(a).substr(pos + std::string_view(op).size()), p);
    std::string o = op;
    if (o == "==") return l == r;
    if (o == "!=") return l != r;
    if (o == "<=") return l <= r;
    if (o == ">=") return l >= r;
    if (o == "<") return l < r;
    return l > r;
  }
  if (a == "true") return true;
  if (a == "false") return false;
  throw ParseError("condition atom without comparison: '" + a + "'");
}

std::vector<Params> samples_of(const std::vector<Record>& recs) {
  std::vector<Params> out;
  for (auto& r : recs)
    if (r.keyword == "sample") out.push_back(parse_assignments(r.label));
  return out;
}

std::pair<std::string, std::string> arrow(const std::string& label) {
  auto pos = label.find("->");
  if (pos == std::string::npos) throw ParseError("expected 'from -> to' in '" + label + "'");
  return {trim(label.substr(0, pos)), trim(label.substr(pos + 2))};
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("DARBOUXLIE_DATA"); env && *env) return env;
  return DARBOUXLIE_DATA_DIR;
}

std::string data_file(const std::string& kind, const std::string& family) {
  auto path = std::filesystem::path(data_dir()) / kind / (family + ".txt");
  if (!std::filesystem::exists(path)) throw GoldenDataMissing("golden data missing: " + path.string());
  return path.string();
}

bool eval_condition(std::string_view cond, const Params& p) {
  auto c = trim(cond);
  if (c.empty()) return true;
  for (auto& disj : split_op(c, "||")) {
    bool all = true;
    for (auto& atom : split_op(disj, "&&"))
      if (!eval_atom(atom, p)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

Params parse_assignments(std::string_view text) {
  Params p;
  for (auto& w : words(text)) {
    auto eq = w.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected name=value, got '" + w + "'");
    p[w.substr(0, eq)] = param_value(w.substr(eq + 1), {});
  }
  return p;
}

Params family_params(const std::string& family, const Params& p) {
  Params out;
  for (auto& n : catalog_param_names(family))
    if (auto it = p.find(n); it != p.end()) out[n] = it->second;
  return out;
}

std::string format_params(const Params& p) {
  std::string s;
  for (auto& [k, v] : p) {
    if (!s.empty()) s += " ";
    s += k + "=" + to_string(v);
  }
  return s;
}

std::string Record::field(const std::string& k, const std::string& def) const {
  auto it = fields.find(k);
  return it == fields.end() ? def : it->second;
}

Record parse_record(std::string_view line, int lineno) {
  Record r;
  r.line = lineno;
  auto s = trim(line);
  auto sp = s.find_first_of(" \t");
  r.keyword = s.substr(0, sp);
  std::string rest = sp == std::string::npos ? "" : trim(std::string_view(s).substr(sp));
  auto parts = split_top(rest, ';');
  // split_top drops empty pieces, so an empty head would shift fields; keep it explicit
  std::string head = rest.empty() || rest[0] == ';' ? "" : (parts.empty() ? "" : parts[0]);
  std::size_t first_field = head.empty() ? 0 : 1;
  if (auto colon = head.find(':'); colon != std::string::npos) {
    r.label = trim(std::string_view(head).substr(0, colon));
    r.body = trim(std::string_view(head).substr(colon + 1));
  } else {
    r.label = head;
  }
  for (std::size_t i = first_field; i < parts.size(); ++i) {
    auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key=value in '" + parts[i] + "'");
    r.fields[trim(std::string_view(parts[i]).substr(0, eq))] = trim(std::string_view(parts[i]).substr(eq + 1));
  }
  return r;
}

std::vector<Record> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GoldenDataMissing("cannot open " + path);
  std::vector<Record> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    out.push_back(parse_record(line, n));
  }
  return out;
}

Inequality parse_inequality(std::string_view text, const Params& p) {
  std::string t(text);
  Inequality q;
  std::size_t pos;
  std::string lhs, rhs;
  if ((pos = t.find("!=")) != std::string::npos) {
    q.sign = SignCond::NonZero;
    lhs = t.substr(0, pos), rhs = t.substr(pos + 2);
  } else if ((pos = t.find('>')) != std::string::npos) {
    q.sign = SignCond::Positive;
    lhs = t.substr(0, pos), rhs = t.substr(pos + 1);
  } else if ((pos = t.find('<')) != std::string::npos) {
    q.sign = SignCond::Negative;
    lhs = t.substr(0, pos), rhs = t.substr(pos + 1);
  } else {
    throw ParseError("inequality needs !=, > or <: '" + t + "'");
  }
  q.poly = parse_coordinate_poly(lhs, p) - parse_coordinate_poly(rhs, p);
  return q;
}

TreeBranch parse_branch(std::string_view text, const Params& p, std::string label) {
  TreeBranch b;
  b.label = std::move(label);
  std::string eqs, ineqs;
  auto bar = std::string(text).find('|');
  if (bar == std::string::npos) {
    eqs = std::string(text);
  } else {
    eqs = std::string(text.substr(0, bar));
    ineqs = std::string(text.substr(bar + 1));
  }
  for (auto& e : split_top(eqs, ',')) {
    auto eq = e.find('=');
    if (eq == std::string::npos) throw ParseError("equation needs '=': '" + e + "'");
    Poly f = parse_coordinate_poly(std::string_view(e).substr(0, eq), p) -
             parse_coordinate_poly(std::string_view(e).substr(eq + 1), p);
    if (!f.is_zero()) b.equalities.push_back(f);
  }
  for (auto& q : split_top(ineqs, ',')) b.inequalities.push_back(parse_inequality(q, p));
  return b;
}

Vec parse_bivector(std::string_view text, int n, const Params& p) {
  auto w = parse_multivector(text, n, p);
  if (!w.is_zero() && w.degree() != 2) throw ParseError("'" + std::string(text) + "' is not a bivector");
  return bivector_coords(w.is_zero() ? MultiVector(n, 2) : w);
}

std::vector<SchoutenEntry> load_schouten_table(const std::string& family) {
  std::ifstream in(data_file("schouten", family));
  std::vector<SchoutenEntry> out;
  std::string line, section;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      auto s = trim(std::string_view(t).substr(1));
      if (s.find(" x ") != std::string::npos && s.size() < 16) section = s;
      continue;
    }
    auto eq = t.find('=');
    auto lr = words(std::string_view(t).substr(0, eq));
    if (eq == std::string::npos || lr.size() != 2) throw ParseError(family + " schouten line " + std::to_string(n) + ": malformed");
    out.push_back({lr[0], lr[1], trim(std::string_view(t).substr(eq + 1)), section, n});
  }
  return out;
}

std::vector<Params> schouten_samples(const std::string& family) {
  // Values inside each family's admissible range.
  static const std::map<std::string, std::vector<Params>> grids = [] {
    std::map<std::string, std::vector<Params>> g;
    auto one = [](std::vector<std::string> vals) {
      std::vector<Params> v;
      for (auto& s : vals) v.push_back({{"alpha", parse_rational(s)}});
      return v;
    };
    auto two = [](std::vector<std::string> as, std::vector<std::string> bs) {
      std::vector<Params> v;
      for (auto& a : as)
        for (auto& b : bs) v.push_back({{"alpha", parse_rational(a)}, {"beta", parse_rational(b)}});
      return v;
    };
    g["s3"] = two({"1", "3/4", "-1"}, {"1/2", "1/4", "-1/3"});
    g["s4"] = one({"2", "-1", "1/2"});
    g["s5"] = two({"1", "2", "1/2"}, {"0", "1", "-1"});
    g["s8"] = one({"1", "1/2", "-1/2"});
    g["s9"] = one({"1", "2", "1/2"});
    return g;
  }();
  if (auto it = grids.find(family); it != grids.end()) return it->second;
  return {Params{}};
}

std::vector<TreeSpec> load_trees(const std::string& family) {
  auto path = data_file("trees", family);
  std::vector<TreeSpec> out;
  TreeSpec* cur = nullptr;
  std::vector<Record> pending;
  for (auto& r : read_records(path)) {
    if (r.keyword == "tree") {
      out.push_back({});
      cur = &out.back();
      cur->name = r.label;
      continue;
    }
    if (r.keyword == "end") {
      cur = nullptr;
      continue;
    }
    if (!cur) throw ParseError(path + ":" + std::to_string(r.line) + ": record outside a tree block");
    if (r.keyword == "sample") {
      cur->samples.push_back(parse_assignments(r.label));
    } else if (r.keyword == "fields") {
      if (r.label != "generic") throw ParseError(path + ":" + std::to_string(r.line) + ": unknown fields mode '" + r.label + "'");
      cur->generic = true;
    } else if (r.keyword == "leaf" || r.keyword == "nosol") {
      TreeLeaf l;
      l.label = r.keyword == "nosol" && r.label.empty() ? "no solutions" : r.label;
      l.locus = r.body;
      l.empty = r.keyword == "nosol";
      l.when = r.field("when");
      l.otherwise_empty = r.field("otherwise") == "nosol";
      l.rep = r.field("rep");
      l.line = r.line;
      cur->leaves.push_back(l);
    } else {
      throw ParseError(path + ":" + std::to_string(r.line) + ": unknown keyword '" + r.keyword + "'");
    }
  }
  return out;
}

const OrbitRowSpec* OrbitBlock::row(const std::string& label) const {
  for (auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

const AutSpec* OrbitBlock::aut(const std::string& n) const {
  for (auto& a : auts)
    if (a.name == n) return &a;
  return nullptr;
}

std::vector<OrbitBlock> load_orbit_table(const std::string& family) {
  auto path = data_file("orbits", family);
  std::vector<OrbitBlock> out;
  OrbitBlock* cur = nullptr;
  auto where = [&](const Record& r) { return path + ":" + std::to_string(r.line) + ": "; };
  for (auto& r : read_records(path)) {
    if (r.keyword == "block") {
      out.push_back({});
      cur = &out.back();
      cur->name = r.label;
      continue;
    }
    if (r.keyword == "end") {
      cur = nullptr;
      continue;
    }
    if (!cur) throw ParseError(where(r) + "record outside a block");
    if (r.keyword == "sample") {
      cur->samples.push_back(parse_assignments(r.label));
    } else if (r.keyword == "row") {
      OrbitRowSpec row;
      row.label = r.label;
      row.locus = r.body;
      row.rep = r.field("rep");
      row.star = r.field("star", "0");
      row.when = r.field("when");
      row.line = r.line;
      try {
        row.dim = std::stoi(r.field("dim"));
      } catch (const std::exception&) {
        throw ParseError(where(r) + "row needs an integer dim=");
      }
      cur->rows.push_back(row);
    } else if (r.keyword == "aut") {
      AutSpec a;
      a.name = r.label;
      for (auto& row : split_top(r.body, '/')) a.rows.push_back(row);
      cur->auts.push_back(a);
    } else if (r.keyword == "merge" || r.keyword == "link") {
      auto [from, to] = arrow(r.label);
      auto aut = r.field("aut");
      if (aut.empty()) throw ParseError(where(r) + "missing aut=");
      if (r.keyword == "merge")
        cur->merges.push_back({from, to, aut, r.field("when"), r.line});
      else
        cur->links.push_back({from, to, aut, r.field("when"), r.line});
    } else if (r.keyword == "class") {
      cur->classes.push_back({r.label, r.field("when"), words(r.body), r.line});
    } else if (r.keyword == "unwitnessed") {
      cur->unwitnessed.push_back({r.label, r.body, r.field("when")});
    } else {
      throw ParseError(where(r) + "unknown keyword '" + r.keyword + "'");
    }
  }
  // cross references
  for (auto& b : out) {
    auto need_row = [&](const std::string& l, int line) {
      if (!b.row(l)) throw ParseError(path + ":" + std::to_string(line) + ": unknown row '" + l + "' in block " + b.name);
    };
    for (auto& m : b.merges) {
      need_row(m.from, m.line);
      need_row(m.to, m.line);
      if (!b.aut(m.aut)) throw ParseError(path + ":" + std::to_string(m.line) + ": unknown automorphism " + m.aut);
    }
    for (auto& l : b.links) {
      need_row(l.from, l.line);
      need_row(l.to, l.line);
      if (!b.aut(l.aut)) throw ParseError(path + ":" + std::to_string(l.line) + ": unknown automorphism " + l.aut);
    }
    for (auto& c : b.classes)
      for (auto& m : c.members) need_row(m, c.line);
  }
  return out;
}

RatMatrix instantiate_aut(const AutSpec& a, int n, const Params& p) {
  if (static_cast<int>(a.rows.size()) != n) throw DimensionMismatch("automorphism " + a.name + " has wrong row count");
  RatMatrix t(n, n);
  for (int i = 0; i < n; ++i) {
    auto entries = split_top(a.rows[i], ',');
    if (entries.size() == 1) entries = words(a.rows[i]);
    if (static_cast<int>(entries.size()) != n) throw DimensionMismatch("automorphism " + a.name + " row has wrong length");
    for (int j = 0; j < n; ++j) t(i, j) = param_value(entries[j], p);
  }
  return t;
}

YbeReference load_ybe_reference(const std::string& family) {
  auto path = data_file("ybe", family);
  auto recs = read_records(path);
  YbeReference ref;
  ref.samples = samples_of(recs);
  for (auto& r : recs) {
    if (r.keyword == "sample") continue;
    if (r.keyword != "mcybe" && r.keyword != "cybe")
      throw ParseError(path + ":" + std::to_string(r.line) + ": unknown keyword '" + r.keyword + "'");
    YbeSystemSpec s;
    s.kind = r.keyword;
    s.when = r.field("when");
    s.polys = split_top(r.body, ',');
    ref.systems.push_back(s);
  }
  if (ref.samples.empty()) ref.samples.push_back({});
  return ref;
}

}  // namespace dlie
