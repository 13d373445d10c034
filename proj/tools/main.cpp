#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "darbouxlie/centerext.hpp"
#include "darbouxlie/classify.hpp"
#include "darbouxlie/expr.hpp"

using namespace dlie;
using json = nlohmann::json;

namespace {

// Exit codes: 0 success / all pass, 1 verification failure, 2 input error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra, format = "text", out;
  std::vector<std::string> params;
  int jobs = 0;
  int degree = 2;
  std::string left, right, rep, point, branch;
  int expect_dim = -1;
  bool empty_branch = false;
  std::vector<std::string> only;
  int points = 10000;
};

struct Output {
  json j = json::object();
  std::ostringstream text;
};

std::string q(const Rational& r) { return to_string(r); }

json poly_json(const Poly& p) {
  json o = json::object();
  for (auto& [m, c] : p.terms()) o[m.is_one() ? "1" : m.str(default_var_name)] = q(c);
  return o;
}

json mv_json(const MultiVector& w) {
  json terms = json::object();
  for (auto& [b, c] : w.terms()) terms[blade_digits(b)] = q(c);
  return {{"deg", w.degree()}, {"terms", terms}};
}

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(q(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

std::string matrix_text(const RatMatrix& m, const std::string& indent = "  ") {
  std::vector<std::string> cells;
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      cells.push_back(q(m(i, k)));
      w = std::max(w, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const auto& s = cells[i * m.cols() + k];
      os << (k ? " " : "") << std::string(w - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os.str();
}

json params_json(const Params& p) {
  json o = json::object();
  for (auto& [k, v] : p) o[k] = q(v);
  return o;
}

Params cli_params(const Options& o) {
  Params p;
  for (auto& s : o.params) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw InputError("--param expects name=rational, got '" + s + "'");
    try {
      p[trim(s.substr(0, eq))] = parse_rational(trim(s.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw InputError("--param " + s + ": " + e.what());
    }
  }
  return p;
}

bool is_family(const std::string& s) {
  auto& f = catalog_families();
  return std::find(f.begin(), f.end(), s) != f.end();
}

LieAlgebra resolve_algebra(const Options& o, bool require_valid = true) {
  if (o.algebra.empty()) throw InputError("--algebra is required");
  LieAlgebra g;
  if (is_family(o.algebra)) {
    g = catalog(o.algebra, cli_params(o));
  } else if (std::filesystem::exists(o.algebra)) {
    if (!o.params.empty()) throw InputError("--param applies to catalog families only");
    g = load_algebra_file(o.algebra);
  } else {
    throw InputError("'" + o.algebra + "' is neither a catalog family nor a readable file");
  }
  if (require_valid) {
    auto v = validate(g);
    if (!v.empty()) throw InputError(g.name() + " is not a Lie algebra: " + v.front());
  }
  return g;
}

std::string family_of(const Options& o) {
  if (!is_family(o.algebra)) throw InputError("this verb needs a catalog family (s1..s12, n1), got '" + o.algebra + "'");
  return o.algebra;
}

void header(Output& out, const LieAlgebra& g) {
  out.j["algebra"] = g.name();
  out.j["dim"] = g.dim();
  if (!g.params().empty()) out.j["params"] = params_json(g.params());
  out.text << g.name() << (g.params().empty() ? "" : " (" + format_params(g.params()) + ")") << ", dim " << g.dim()
           << "\n";
}

// ------------------------------------------------------------------ verbs

int cmd_validate(const Options& o, Output& out) {
  auto g = resolve_algebra(o, false);
  header(out, g);
  auto v = validate(g);
  out.j["valid"] = v.empty();
  out.j["violations"] = v;
  if (v.empty()) {
    out.text << "valid Lie algebra\n" << format_algebra(g);
    return 0;
  }
  for (auto& s : v) out.text << "violation: " << s << "\n";
  return 1;
}

int cmd_derivations(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  auto basis = derivation_basis(g);
  out.j["derivations"] = json::array();
  out.text << "dim der = " << basis.size() << "  (column j is d(e_j))\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.j["derivations"].push_back(matrix_json(basis[i]));
    out.text << "D" << i + 1 << " =\n" << matrix_text(basis[i]);
  }
  return 0;
}

int cmd_invariants(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  std::vector<int> degrees;
  if (o.degree > 0) {
    if (o.degree > g.dim()) throw InputError("--degree exceeds the dimension");
    degrees.push_back(o.degree);
  } else {
    for (int m = 1; m <= g.dim(); ++m) degrees.push_back(m);
  }
  out.j["invariants"] = json::object();
  for (int m : degrees) {
    auto inv = invariants(g, m);
    json arr = json::array();
    out.text << "(Lambda^" << m << " g)^g: dim " << inv.size() << "\n";
    for (auto& w : inv) {
      arr.push_back(mv_json(w));
      out.text << "  " << to_string(w) << "\n";
    }
    out.j["invariants"][std::to_string(m)] = arr;
  }
  return 0;
}

int cmd_schouten(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  auto parse = [&](const std::string& s) {
    try {
      return parse_multivector(s, g.dim(), g.params());
    } catch (const std::exception& e) {
      throw InputError("cannot parse multivector '" + s + "': " + e.what());
    }
  };
  if (!o.left.empty() || !o.right.empty()) {
    if (o.left.empty() || o.right.empty()) throw InputError("--left and --right go together");
    auto r = schouten(g, parse(o.left), parse(o.right));
    out.j["result"] = mv_json(r);
    out.text << "[" << o.left << ", " << o.right << "] = " << to_string(r) << "\n";
    return 0;
  }
  // full tables on basis blades: g x L2, L2 x L2, g x L3
  out.j["tables"] = json::array();
  const int shapes[3][2] = {{1, 2}, {2, 2}, {1, 3}};
  for (auto& sh : shapes) {
    if (sh[1] > g.dim()) continue;
    json rows = json::array();
    out.text << "# g^" << sh[0] << " x g^" << sh[1] << "\n";
    for (Blade a : blade_basis(g.dim(), sh[0]))
      for (Blade b : blade_basis(g.dim(), sh[1])) {
        if (sh[0] == sh[1] && b < a) continue;
        auto r = schouten_blades(g, a, b);
        rows.push_back({{"left", blade_name(a)}, {"right", blade_name(b)}, {"value", mv_json(r)}});
        out.text << blade_name(a) << " " << blade_name(b) << " = " << to_string(r) << "\n";
      }
    out.j["tables"].push_back({{"shape", {sh[0], sh[1]}}, {"entries", rows}});
  }
  return 0;
}

int cmd_ybe(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  auto ys = yb_system(g);
  auto list = [&](const char* key, const char* title, const std::vector<Poly>& ps) {
    json arr = json::array();
    out.text << title << ":\n";
    for (auto& p : ps) {
      arr.push_back(poly_json(p));
      out.text << "  " << p.str() << " = 0\n";
    }
    if (ps.empty()) out.text << "  (none)\n";
    out.j[key] = arr;
  };
  // the real-locus form is what one usually writes down (squares of linear forms become
  // the forms); the raw components span the coefficient space of the projected [r, r]
  std::vector<Poly> mc, cy;
  for (auto& p : span_basis(ys.mcybe)) mc.push_back(primitive(p));
  for (auto& p : span_basis(ys.cybe)) cy.push_back(primitive(p));
  list("mcybe", "mCYBE (real locus)", simplify_real_locus(ys.mcybe));
  list("mcybe_components", "mCYBE components", mc);
  list("cybe", "CYBE components", cy);
  auto inv3 = g.dim() >= 3 ? invariants(g, 3) : std::vector<MultiVector>{};
  out.j["inv3"] = json::array();
  out.text << "(Lambda^3 g)^g: dim " << inv3.size() << "\n";
  for (auto& w : inv3) {
    out.j["inv3"].push_back(mv_json(w));
    out.text << "  " << to_string(w) << "\n";
  }
  return 0;
}

int cmd_bricks(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  if (o.degree < 1 || o.degree > g.dim()) throw InputError("--degree out of range");
  auto bricks = find_bricks(fundamental_fields(g, o.degree));
  out.j["degree"] = o.degree;
  out.j["bricks"] = json::array();
  out.text << "bricks on Lambda^" << o.degree << ": " << bricks.size() << "\n";
  for (auto& b : bricks) {
    json ev = json::array();
    for (auto& e : b.eigenvalues) ev.push_back(q(e));
    out.j["bricks"].push_back({{"poly", poly_json(b.poly)}, {"eigenvalues", ev}});
    out.text << "  " << b.poly.str() << "\n";
  }
  return 0;
}

json branch_json(const BranchReport& r) {
  return {{"label", r.label},           {"status", to_string(r.status)}, {"family", r.family_ok},
          {"linear", r.family_linear},  {"ranks", r.ranks},              {"flow", r.flow_ok},
          {"samples", r.samples},       {"failures", r.failures}};
}

void branch_text(std::ostream& os, const BranchReport& r) {
  os << "  " << r.label << ": " << to_string(r.status);
  if (!r.ranks.empty()) os << "  rank " << *std::max_element(r.ranks.begin(), r.ranks.end());
  os << "\n";
  for (auto& f : r.failures) os << "    - " << f << "\n";
}

int cmd_darboux_verify(const Options& o, Output& out) {
  if (!o.branch.empty()) {
    auto g = resolve_algebra(o);
    header(out, g);
    TreeBranch b;
    try {
      b = parse_branch(o.branch, g.params(), "branch");
    } catch (const ParseError& e) {
      throw InputError(e.what());
    }
    auto r = o.empty_branch ? verify_empty_branch(g, b)
                            : verify_branch(g, b, {}, o.expect_dim >= 0 ? std::optional<int>(o.expect_dim) : std::nullopt);
    out.j["branch"] = branch_json(r);
    branch_text(out.text, r);
    return r.status == BranchStatus::Pass || r.status == BranchStatus::NoSolutions ? 0 : 1;
  }
  auto fam = family_of(o);
  out.j["family"] = fam;
  out.j["trees"] = json::array();
  bool ok = true;
  for (auto& run : verify_trees(fam)) {
    json leaves = json::array();
    out.text << run.tree << (run.params.empty() ? "" : " [" + format_params(run.params) + "]") << "\n";
    for (auto& l : run.leaves) {
      leaves.push_back(branch_json(l));
      branch_text(out.text, l);
    }
    ok = ok && run.pass();
    out.j["trees"].push_back(
        {{"tree", run.tree}, {"params", params_json(run.params)}, {"leaves", leaves}, {"skipped", run.skipped}});
  }
  out.j["pass"] = ok;
  out.text << (ok ? "all leaves verified\n" : "FAILURES present\n");
  return ok ? 0 : 1;
}

Vec parse_rep(const LieAlgebra& g, const std::string& s) {
  try {
    return parse_bivector(s, g.dim(), g.params());
  } catch (const std::exception& e) {
    throw InputError("cannot parse bivector '" + s + "': " + e.what());
  }
}

int cmd_orbit_dim(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  if (o.rep.empty()) throw InputError("--rep is required");
  Vec r = parse_rep(g, o.rep);
  int d = orbit_dim(g, bivector_from_coords(g.dim(), r));
  bool m = is_mcybe_solution(g, r), c = is_cybe_solution(g, r);
  out.j["rep"] = mv_json(bivector_from_coords(g.dim(), r));
  out.j["orbit_dim"] = d;
  out.j["mcybe"] = m;
  out.j["cybe"] = c;
  out.text << "r = " << to_string(bivector_from_coords(g.dim(), r)) << "\norbit dim " << d << "\nmCYBE "
           << (m ? "yes" : "no") << ", CYBE " << (c ? "yes" : "no") << "\n";
  return 0;
}

int cmd_rank_at(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  if (o.point.empty()) throw InputError("--point is required (comma-separated coordinates x1,...)");
  Vec p;
  try {
    for (auto& s : split_top(o.point, ',')) p.push_back(parse_rational(s));
  } catch (const std::exception& e) {
    throw InputError(std::string("bad --point: ") + e.what());
  }
  int n = binomial(g.dim(), o.degree);
  if (static_cast<int>(p.size()) != n)
    throw InputError("--point needs " + std::to_string(n) + " coordinates for Lambda^" + std::to_string(o.degree));
  int r = rank_at(fundamental_fields(g, o.degree), p);
  out.j["rank"] = r;
  out.j["degree"] = o.degree;
  out.text << "rank of M(p) on Lambda^" << o.degree << ": " << r << "\n";
  return 0;
}

int cmd_center_ext(const Options& o, Output& out) {
  auto g = resolve_algebra(o);
  header(out, g);
  auto z = center(g);
  out.j["center_dim"] = z.size();
  out.text << "center dim " << z.size() << "\n";
  auto sol = solve_grading(g);
  if (!sol) {
    out.j["grading"] = nullptr;
    out.text << "no admissible grading: the extension method does not apply\n";
    return 0;
  }
  json al = json::array();
  out.text << "alpha =";
  for (auto& a : sol->alphas) {
    al.push_back(q(a));
    out.text << " " << q(a);
  }
  out.text << "\n";
  auto rep = build_rep(g, *sol);
  bool fid = commutation_fidelity(g, rep), faithful = is_faithful(rep);
  json mats = json::array();
  for (std::size_t i = 0; i < rep.matrices.size(); ++i) {
    mats.push_back(matrix_json(rep.matrices[i]));
    out.text << "R_e" << i + 1 << " =\n" << matrix_text(rep.matrices[i]);
  }
  out.j["grading"] = al;
  out.j["matrices"] = mats;
  out.j["fidelity"] = fid;
  out.j["faithful"] = faithful;
  out.text << "commutation fidelity " << (fid ? "ok" : "FAILED") << ", faithful " << (faithful ? "yes" : "NO") << "\n";
  return fid && faithful ? 0 : 1;
}

json coboundary_json(const CoboundaryReport& r, std::ostream& os) {
  json w = json::array(), c = json::array();
  for (auto& x : r.witnesses) {
    w.push_back({{"block", x.block}, {"kind", x.kind}, {"from", x.from}, {"to", x.to}, {"aut", x.aut},
                 {"params", params_json(x.params)}, {"ok", x.ok}, {"detail", x.detail}});
    if (!x.ok)
      os << "  " << x.kind << " " << x.from << " -> " << x.to << " [" << format_params(x.params) << "] FAILED: " << x.detail
         << "\n";
  }
  for (auto& x : r.classes) {
    c.push_back({{"block", x.block}, {"name", x.name}, {"params", params_json(x.params)}, {"members", x.members},
                 {"unwitnessed", x.unwitnessed}, {"links_ok", x.links_ok}});
    os << "  class " << x.block << "/" << x.name << (x.params.empty() ? "" : " [" + format_params(x.params) + "]") << ":";
    for (auto& m : x.members) os << " " << m;
    if (!x.unwitnessed.empty()) os << "  (unwitnessed:" << [&] {
        std::string s;
        for (auto& u : x.unwitnessed) s += " " + u;
        return s;
      }() << ")";
    os << "\n";
  }
  for (auto& u : r.unwitnessed) os << "  unwitnessed: " << u << "\n";
  std::size_t ok = std::count_if(r.witnesses.begin(), r.witnesses.end(), [](auto& x) { return x.ok; });
  os << "  witnesses " << ok << "/" << r.witnesses.size() << " verified\n";
  return {{"witnesses", w}, {"classes", c}, {"unwitnessed", r.unwitnessed}, {"pass", r.pass()}};
}

int cmd_coboundary(const Options& o, Output& out) {
  auto fam = family_of(o);
  out.j["family"] = fam;
  auto r = verify_coboundary_classes(fam);
  out.text << fam << "\n";
  out.j["report"] = coboundary_json(r, out.text);
  return r.pass() ? 0 : 1;
}

// One family's full table check.
struct FamilyResult {
  json j = json::object();
  std::string text;
  bool ok = true;
};

FamilyResult verify_family_tables(const std::string& fam, const Options& o) {
  FamilyResult res;
  std::ostringstream os;
  auto want = [&](const std::string& part) {
    return o.only.empty() || std::find(o.only.begin(), o.only.end(), part) != o.only.end();
  };
  os << "== " << fam << "\n";
  if (want("schouten")) {
    auto r = verify_schouten_table(fam);
    res.ok &= r.pass();
    res.j["schouten"] = {{"entries", r.entries}, {"checks", r.checks}, {"mismatches", r.mismatches}, {"pass", r.pass()}};
    os << "schouten: " << r.entries << " entries, " << r.checks << " checks, " << r.mismatches.size() << " mismatches\n";
    for (auto& m : r.mismatches) os << "  - " << m << "\n";
  }
  if (want("ybe")) {
    json arr = json::array();
    bool ok = true;
    for (auto& c : compare_ybe_locus(fam, o.points)) {
      ok &= c.pass();
      arr.push_back({{"kind", c.kind},
                     {"params", params_json(c.params)},
                     {"reference_in_computed", c.reference_in_computed},
                     {"computed_in_reference", c.computed_in_reference},
                     {"points", c.points},
                     {"disagreements", c.disagreements},
                     {"pass", c.pass()}});
      os << "ybe " << c.kind << (c.params.empty() ? "" : " [" + format_params(c.params) + "]") << ": "
         << (c.pass() ? "equal" : "DIFFERENT") << " (" << (c.reference_in_computed.empty() ? "-" : c.reference_in_computed)
         << "/" << (c.computed_in_reference.empty() ? "-" : c.computed_in_reference) << ", " << c.points << " points, "
         << c.disagreements << " disagreements)\n";
    }
    res.ok &= ok;
    res.j["ybe"] = arr;
  }
  if (want("orbits")) {
    auto r = verify_orbit_table(fam);
    json arr = json::array();
    std::size_t bad = 0;
    for (auto& x : r.records) {
      arr.push_back({{"block", x.block},
                     {"label", x.label},
                     {"params", params_json(x.params)},
                     {"rep", mv_json(bivector_from_coords(4, x.rep))},
                     {"rep_source", x.rep_source},
                     {"dim", x.expected_dim},
                     {"computed_dim", x.computed_dim},
                     {"mcybe", x.mcybe},
                     {"cybe", x.cybe},
                     {"star", x.star},
                     {"failures", x.failures}});
      if (!x.pass()) {
        ++bad;
        os << "  " << x.block << "/" << x.label << (x.params.empty() ? "" : " [" + format_params(x.params) + "]") << ":";
        for (auto& f : x.failures) os << " " << f << ";";
        os << "\n";
      }
    }
    res.ok &= r.pass();
    res.j["orbits"] = {{"records", arr}, {"pass", r.pass()}};
    os << "orbits: " << r.records.size() << " records, " << bad << " failing\n";
  }
  if (want("trees")) {
    json arr = json::array();
    std::size_t leaves = 0, bad = 0;
    for (auto& run : verify_trees(fam)) {
      json ls = json::array();
      for (auto& l : run.leaves) {
        ++leaves;
        ls.push_back(branch_json(l));
        if (l.status != BranchStatus::Pass && l.status != BranchStatus::NoSolutions) {
          ++bad;
          os << "  " << run.tree << " [" << format_params(run.params) << "] ";
          branch_text(os, l);
        }
      }
      res.ok &= run.pass();
      arr.push_back({{"tree", run.tree}, {"params", params_json(run.params)}, {"leaves", ls}});
    }
    res.j["trees"] = arr;
    os << "trees: " << leaves << " leaves, " << bad << " failing\n";
  }
  if (want("coboundary")) {
    auto r = verify_coboundary_classes(fam);
    std::ostringstream cb;
    res.j["coboundary"] = coboundary_json(r, cb);
    res.ok &= r.pass();
    os << "coboundary:\n" << cb.str();
  }
  res.j["pass"] = res.ok;
  os << (res.ok ? "PASS" : "FAIL") << " " << fam << "\n";
  res.text = os.str();
  return res;
}

int cmd_verify_tables(const Options& o, Output& out) {
  static const std::vector<std::string> parts = {"schouten", "ybe", "orbits", "trees", "coboundary"};
  for (auto& p : o.only)
    if (std::find(parts.begin(), parts.end(), p) == parts.end()) throw InputError("unknown --only part '" + p + "'");
  std::vector<std::string> fams;
  if (o.algebra.empty() || o.algebra == "all")
    fams = catalog_families();
  else
    fams.push_back(family_of(o));
  std::vector<FamilyResult> results(fams.size());
  std::vector<std::string> errors(fams.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < fams.size();) {
      try {
        results[i] = verify_family_tables(fams[i], o);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned jobs = o.jobs > 0 ? static_cast<unsigned>(o.jobs) : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(fams.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < fams.size(); ++i)
    if (!errors[i].empty()) throw InputError(fams[i] + ": " + errors[i]);

  bool ok = true;
  out.j["families"] = json::object();
  for (std::size_t i = 0; i < fams.size(); ++i) {
    ok &= results[i].ok;
    out.j["families"][fams[i]] = results[i].j;
    out.text << results[i].text;
  }
  out.j["pass"] = ok;
  out.text << (ok ? "all tables verified\n" : "verification failures present\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"darbouxlie: r-matrices, Darboux families and coboundary Lie bialgebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool algebra_required = true) {
    auto* a = sub->add_option("--algebra", o.algebra, "catalog family (s1..s12, n1) or algebra file");
    if (algebra_required) a->required();
    sub->add_option("--param", o.params, "parameter binding name=rational (repeatable)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write output to this file");
  };

  std::map<std::string, std::function<int(const Options&, Output&)>> verbs;
  auto add = [&](const std::string& name, const std::string& help, auto fn, bool algebra_required = true) {
    auto* sub = app.add_subcommand(name, help);
    common(sub, algebra_required);
    verbs[name] = fn;
    return sub;
  };

  add("validate", "check antisymmetry and the Jacobi identity", cmd_validate);
  add("derivations", "basis of the derivation algebra", cmd_derivations);
  add("invariants", "g-invariant multivectors", cmd_invariants)
      ->add_option("--degree", o.degree, "multivector degree (0 = all)");
  auto* sch = add("schouten", "Schouten bracket of two multivectors, or the basis tables", cmd_schouten);
  sch->add_option("--left", o.left, "e.g. \"e1\" or \"e12 + 2*e34\"");
  sch->add_option("--right", o.right);
  add("ybe", "modified and plain classical Yang-Baxter systems", cmd_ybe);
  add("bricks", "linear Darboux polynomials common to all fundamental fields", cmd_bricks)
      ->add_option("--degree", o.degree, "exterior degree (default 2)");
  auto* dv = add("darboux-verify", "verify the Darboux trees of a family, or one branch", cmd_darboux_verify);
  dv->add_option("--branch", o.branch, "\"f=0, g=0 | h!=0, k>0\" in coordinates x1..");
  dv->add_option("--expect-dim", o.expect_dim, "expected orbit dimension on the branch");
  dv->add_flag("--empty", o.empty_branch, "the branch is claimed to contain no mCYBE solutions");
  add("orbit-dim", "dimension of the Aut(g)-orbit of a bivector", cmd_orbit_dim)
      ->add_option("--rep", o.rep, "bivector, e.g. \"e12 + e34\"");
  auto* rk = add("rank-at", "rank of the fundamental vector fields at a point", cmd_rank_at);
  rk->add_option("--point", o.point, "coordinates x1,x2,... (rationals)");
  rk->add_option("--degree", o.degree, "exterior degree (default 2)");
  add("center-ext", "grading, one-dimensional extension and matrix representation", cmd_center_ext);
  auto* vt = add("verify-tables", "check every shipped table of one family or all", cmd_verify_tables, false);
  vt->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)")->check(CLI::NonNegativeNumber);
  vt->add_option("--only", o.only, "subset of: schouten ybe orbits trees coboundary");
  vt->add_option("--points", o.points, "random points per Yang-Baxter comparison")->check(CLI::PositiveNumber);
  add("coboundary-classes", "verify the coboundary class groupings of a family", cmd_coboundary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  int code = 0;
  try {
    for (auto* sub : app.get_subcommands()) code = verbs.at(sub->get_name())(o, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GoldenDataMissing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // ParamOutOfRange, DimensionMismatch, unknown family
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string rendered = o.format == "json" ? out.j.dump(2) + "\n" : out.text.str();
  if (o.out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
    f << rendered;
  }
  return code;
}
