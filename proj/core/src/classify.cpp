#include "darbouxlie/classify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "darbouxlie/expr.hpp"

namespace dlie {

namespace {

constexpr int kDim = 4;
constexpr int kBivectors = 6;

bool star_flag(const std::string& s, const Params& p) {
  auto t = trim(s);
  if (t.empty() || t == "0") return false;
  if (t == "1") return true;
  return eval_condition(t, p);
}

std::vector<Poly> locus_generators(const TreeBranch& b, const YbSystem& ys) {
  auto gens = b.equalities;
  gens.insert(gens.end(), ys.mcybe.begin(), ys.mcybe.end());
  return gens;
}

RatMatrix aut_or_identity(const OrbitBlock& block, const std::string& name, const Params& p) {
  if (trim(name).empty()) return RatMatrix::identity(kDim);
  const AutSpec* a = block.aut(name);
  if (!a) throw GoldenDataMissing("unknown automorphism '" + name + "' in block " + block.name);
  return instantiate_aut(*a, kDim, p);
}

}  // namespace

// --- Schouten ---------------------------------------------------------------------

SchoutenReport verify_schouten_table(const std::string& family) {
  SchoutenReport rep;
  rep.family = family;
  auto entries = load_schouten_table(family);
  rep.entries = entries.size();
  std::set<int> bad_lines;
  for (auto& p : schouten_samples(family)) {
    auto g = catalog(family, p);
    for (auto& e : entries) {
      auto a = parse_multivector(e.left, kDim, p);
      auto b = parse_multivector(e.right, kDim, p);
      auto expected = parse_multivector(e.value, kDim, p);
      auto got = schouten(g, a, b);
      ++rep.checks;
      if (got == expected) continue;
      if (!bad_lines.insert(e.line).second) continue;  // report each table line once
      std::string at = p.empty() ? "" : " at " + format_params(p);
      rep.mismatches.push_back(family + " line " + std::to_string(e.line) + ": [" + e.left + ", " + e.right +
                               "]" + at + ": table " + to_string(expected) + ", computed " + to_string(got));
    }
  }
  return rep;
}

// --- Yang-Baxter loci -------------------------------------------------------------

namespace {

// "" when some element of `as` could not be shown to vanish on the real zero set of `bs`.
std::string contained(const std::vector<Poly>& as, const std::vector<Poly>& bs) {
  static const char* names[] = {"ideal", "ideal", "radical", "real"};
  int stage = 0;
  std::optional<std::vector<Poly>> real;
  for (auto& a : as) {
    if (a.is_zero()) continue;
    if (bs.empty()) return "";
    Poly sq = a * a;
    int sq_bound = std::max(2, sq.degree() - 1);
    if (ideal_membership(a, bs, 2)) {
      stage = std::max(stage, 1);
      continue;
    }
    if (ideal_membership(sq, bs, sq_bound)) {
      stage = std::max(stage, 2);
      continue;
    }
    if (!real) real = simplify_real_locus(bs);
    if (!real->empty() && (ideal_membership(a, *real, 2) || ideal_membership(sq, *real, sq_bound))) {
      stage = 3;
      continue;
    }
    return "";
  }
  return names[stage];
}

bool vanishes(const std::vector<Poly>& ps, const Vec& x) {
  for (auto& p : ps)
    if (p.eval(x) != 0) return false;
  return true;
}

}  // namespace

std::vector<LocusComparison> compare_ybe_locus(const std::string& family, int random_points) {
  auto ref = load_ybe_reference(family);
  std::vector<LocusComparison> out;
  for (auto& sample : ref.samples) {
    auto p = family_params(family, sample);
    auto g = catalog(family, p);
    auto ys = yb_system(g);
    for (auto& sys : ref.systems) {
      if (!eval_condition(sys.when, sample)) continue;
      LocusComparison c;
      c.family = family;
      c.kind = sys.kind;
      c.params = p;
      c.computed = sys.kind == "cybe" ? span_basis(ys.cybe) : ys.mcybe;
      for (auto& s : sys.polys) c.reference.push_back(parse_coordinate_poly(s, sample));
      c.reference_in_computed = contained(c.reference, c.computed);
      c.computed_in_reference = contained(c.computed, c.reference);

      std::mt19937 rng(20240 + static_cast<unsigned>(out.size()));
      std::uniform_int_distribution<int> coin(0, 1), num(-3, 3), den(1, 2);
      auto check = [&](const Vec& x) {
        ++c.points;
        bool a = vanishes(c.computed, x), b = vanishes(c.reference, x);
        if (a) ++c.on_locus;
        if (a != b) ++c.disagreements;
      };
      for (int i = 0; i < random_points; ++i) {
        Vec x(kBivectors);
        for (auto& v : x) v = coin(rng) ? Rational(0) : Rational(num(rng), den(rng));
        for (auto& v : x) v.canonicalize();
        check(x);
      }
      for (auto& x : sample_locus(c.computed, {}, kBivectors, 200)) check(x);
      for (auto& x : sample_locus(c.reference, {}, kBivectors, 200)) check(x);
      out.push_back(std::move(c));
    }
  }
  return out;
}

// --- Orbit tables ----------------------------------------------------------------

std::map<std::string, EffectiveRep> effective_reps(const LieAlgebra& g, const OrbitBlock& block, const Params& p) {
  std::map<std::string, EffectiveRep> reps;
  for (auto& r : block.rows)
    if (!r.rep.empty() && eval_condition(r.when, p)) reps[r.label] = {parse_bivector(r.rep, kDim, p), "table"};
  // Rows without a printed representative: image of a merge source.
  for (bool grew = true; grew;) {
    grew = false;
    for (auto& m : block.merges) {
      if (reps.count(m.to) || !reps.count(m.from) || !eval_condition(m.when, p)) continue;
      const OrbitRowSpec* to = block.row(m.to);
      if (!to || !eval_condition(to->when, p)) continue;
      auto t = aut_or_identity(block, m.aut, p);
      if (!is_automorphism(g, t)) continue;
      reps[m.to] = {lift_group(t, 2) * reps[m.from].rep, "image of " + m.from + " under " + m.aut};
      grew = true;
    }
  }
  std::optional<YbSystem> ys;
  for (auto& r : block.rows) {
    if (reps.count(r.label) || !eval_condition(r.when, p)) continue;
    if (!ys) ys = yb_system(g);
    auto b = parse_branch(r.locus, p, r.label);
    auto pts = sample_locus(locus_generators(b, *ys), b.inequalities, kBivectors, 1);
    if (!pts.empty()) reps[r.label] = {pts.front(), "sampled"};
  }
  return reps;
}

bool OrbitTableReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](auto& r) { return r.pass(); });
}

OrbitTableReport verify_orbit_table(const std::string& family) {
  OrbitTableReport rep;
  rep.family = family;
  for (auto& block : load_orbit_table(family)) {
    for (auto& sample : block.samples) {
      auto g = catalog(family, family_params(family, sample));
      auto reps = effective_reps(g, block, sample);
      for (auto& row : block.rows) {
        if (!eval_condition(row.when, sample)) continue;
        OrbitRecordResult r;
        r.block = block.name;
        r.label = row.label;
        r.params = sample;
        r.expected_dim = row.dim;
        r.star = star_flag(row.star, sample);
        auto it = reps.find(row.label);
        if (it == reps.end()) {
          r.failures.push_back("no representative available");
          rep.records.push_back(std::move(r));
          continue;
        }
        r.rep = it->second.rep;
        r.rep_source = it->second.source;
        auto branch = parse_branch(row.locus, sample, row.label);
        r.in_locus = locus_contains(branch, r.rep);
        r.computed_dim = orbit_dim(g, bivector_from_coords(kDim, r.rep));
        r.mcybe = is_mcybe_solution(g, r.rep);
        r.cybe = is_cybe_solution(g, r.rep);
        r.cocycle = cocycle_identity_holds(g, r.rep);
        std::string rs = to_string(bivector_from_coords(kDim, r.rep));
        if (!r.in_locus) r.failures.push_back("representative " + rs + " is outside the row's locus");
        if (row.dim >= 0 && !r.dim_ok())
          r.failures.push_back("orbit dimension " + std::to_string(r.computed_dim) + ", table says " +
                               std::to_string(row.dim));
        if (!r.mcybe) r.failures.push_back("representative " + rs + " does not solve the mCYBE");
        else if (!r.star_ok())
          r.failures.push_back(r.cybe ? "starred row but representative solves the CYBE"
                                      : "unstarred row but representative does not solve the CYBE");
        if (!r.cocycle) r.failures.push_back("cocycle identity fails");
        rep.records.push_back(std::move(r));
      }
    }
  }
  return rep;
}

bool verify_automorphism_witness(const LieAlgebra& g, const RatMatrix& t, const Vec& r_from, const TreeBranch& to) {
  require_automorphism(g, t);
  return locus_contains(to, lift_group(t, 2) * r_from);
}

// --- Coboundary classes ---------------------------------------------------------------

bool CoboundaryReport::pass() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](auto& w) { return w.ok; }) &&
         std::all_of(classes.begin(), classes.end(), [](auto& c) { return c.links_ok; });
}

CoboundaryReport verify_coboundary_classes(const std::string& family) {
  CoboundaryReport rep;
  rep.family = family;
  for (auto& block : load_orbit_table(family)) {
    for (auto& sample : block.samples) {
      auto g = catalog(family, family_params(family, sample));
      auto reps = effective_reps(g, block, sample);
      auto witness = [&](const std::string& kind, const std::string& from, const std::string& to,
                         const std::string& aut) {
        WitnessResult w;
        w.block = block.name;
        w.kind = kind;
        w.from = from;
        w.to = to;
        w.aut = aut.empty() ? "id" : aut;
        w.params = sample;
        try {
          auto t = aut_or_identity(block, aut, sample);
          if (!reps.count(from) || !reps.count(to)) {
            w.detail = "missing representative";
          } else if (kind == "merge") {
            auto branch = parse_branch(block.row(to)->locus, sample, to);
            w.ok = verify_automorphism_witness(g, t, reps[from].rep, branch);
            if (!w.ok) w.detail = "image lies outside the target locus";
          } else {
            w.ok = same_coboundary(g, reps[from].rep, reps[to].rep, t);
            if (!w.ok) w.detail = "classes modulo invariants differ";
          }
        } catch (const NotAnAutomorphism& e) {
          w.detail = std::string("not an automorphism: ") + e.what();
        }
        return w;
      };

      for (auto& m : block.merges) {
        if (!eval_condition(m.when, sample)) continue;
        const OrbitRowSpec* to = block.row(m.to);
        const OrbitRowSpec* from = block.row(m.from);
        if (!eval_condition(to->when, sample) || !eval_condition(from->when, sample)) continue;
        rep.witnesses.push_back(witness("merge", m.from, m.to, m.aut));
      }

      for (auto& cls : block.classes) {
        if (!eval_condition(cls.when, sample)) continue;
        ClassResult c;
        c.block = block.name;
        c.name = cls.name;
        c.params = sample;
        c.members = cls.members;
        std::set<std::string> members(cls.members.begin(), cls.members.end());
        std::map<std::string, std::vector<std::string>> adj;
        for (auto& l : block.links) {
          if (!members.count(l.from) || !members.count(l.to) || !eval_condition(l.when, sample)) continue;
          auto w = witness("link", l.from, l.to, l.aut);
          if (w.ok) {
            adj[l.from].push_back(l.to);
            adj[l.to].push_back(l.from);
          } else {
            c.links_ok = false;
          }
          rep.witnesses.push_back(std::move(w));
        }
        std::set<std::string> seen{cls.members.front()};
        std::queue<std::string> q;
        q.push(cls.members.front());
        while (!q.empty()) {
          auto u = q.front();
          q.pop();
          for (auto& v : adj[u])
            if (seen.insert(v).second) q.push(v);
        }
        for (auto& m : cls.members)
          if (!seen.count(m)) {
            c.unwitnessed.push_back(m);
            rep.unwitnessed.push_back(block.name + " " + format_params(sample) + " class " + cls.name + ": " + m +
                                      " not linked to " + cls.members.front());
          }
        rep.classes.push_back(std::move(c));
      }

      for (auto& u : block.unwitnessed)
        if (eval_condition(u.when, sample))
          rep.unwitnessed.push_back(block.name + " " + format_params(sample) + " " + u.label + ": " + u.reason);
    }
  }
  return rep;
}

// --- Trees ---------------------------------------------------------------------------

std::vector<RatMatrix> generic_derivation_basis(const std::string& family, const Params& p) {
  auto names = catalog_param_names(family);
  auto g0 = catalog(family, family_params(family, p));
  if (names.empty()) return derivation_basis(g0);
  // S(t) = system at p + t*dir, polynomial in t; interpolate on t = 0..D, confirm at D+1
  constexpr int D = 4, K = 4;
  static const int dir[] = {1, 2, 5, 7};
  auto at = [&](int t) {
    Params q = family_params(family, p);
    for (std::size_t i = 0; i < names.size(); ++i) q[names[i]] += Rational(dir[i % 4] * t);
    return derivation_system(catalog_unchecked(family, q));
  };
  std::vector<RatMatrix> vals;
  for (int t = 0; t <= D; ++t) vals.push_back(at(t));
  RatMatrix vand(D + 1, D + 1);
  for (int t = 0; t <= D; ++t)
    for (int e = 0; e <= D; ++e) vand(t, e) = Rational(static_cast<long>(std::pow(t, e)));
  std::vector<Vec> inv_cols;
  for (int t = 0; t <= D; ++t) inv_cols.push_back(*solve(vand, basis_vector(D + 1, t)));
  std::size_t R = vals[0].rows(), C = vals[0].cols();
  std::vector<RatMatrix> coef(D + 1, RatMatrix(R, C));
  for (int t = 0; t <= D; ++t)
    for (int e = 0; e <= D; ++e) {
      Rational w = inv_cols[t][e];
      if (w != 0) coef[e] = coef[e] + vals[t] * w;
    }
  {
    RatMatrix check(R, C);
    Rational x(D + 1), pw(1);
    for (int e = 0; e <= D; ++e, pw *= x) check = check + coef[e] * pw;
    if (check != at(D + 1)) throw std::logic_error(family + ": brackets not polynomial of low degree in the parameters");
  }
  // d(t) = sum d_j t^j with S(t) d(t) = O(t^(K+1)); keep the constant terms d_0
  RatMatrix big(R * (K + 1), C * (K + 1));
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j <= k; ++j) {
      if (k - j > D) continue;
      const RatMatrix& a = coef[k - j];
      for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c)
          if (a(r, c) != 0) big(k * R + r, j * C + c) = a(r, c);
    }
  std::vector<Vec> heads;
  for (auto& v : kernel_basis(big)) heads.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(C));
  if (heads.empty()) return {};
  auto rr = rref(RatMatrix::from_rows(heads, C));
  int n = g0.dim();
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    RatMatrix d(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) d(k, l) = rr.m(i, static_cast<std::size_t>(k * n + l));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<LinearVectorField> generic_fields(const std::string& family, const Params& p, int m) {
  std::vector<LinearVectorField> out;
  for (auto& d : generic_derivation_basis(family, p)) out.push_back(lift(d, m));
  return out;
}

std::vector<LinearVectorField> shared_fields(const LieAlgebra& g, const LieAlgebra& h, int m) {
  if (g.dim() != h.dim()) throw DimensionMismatch("shared_fields: algebras of different dimension");
  auto dg = derivation_basis(g), dh = derivation_basis(h);
  std::size_t len = static_cast<std::size_t>(g.dim()) * g.dim();
  std::vector<Vec> cols;
  for (auto& d : dg) cols.push_back(flatten(d));
  for (auto& d : dh) cols.push_back(vec_scale(flatten(d), Rational(-1)));
  std::vector<LinearVectorField> out;
  if (cols.empty()) return out;
  for (auto& k : kernel_basis(RatMatrix::from_columns(cols, len))) {
    RatMatrix d(g.dim(), g.dim());
    for (std::size_t i = 0; i < dg.size(); ++i)
      if (k[i] != 0) d = d + dg[i] * k[i];
    if (!d.is_zero()) out.push_back(lift(d, m));
  }
  return out;
}

bool TreeRunReport::pass() const {
  return std::all_of(leaves.begin(), leaves.end(), [](auto& l) {
    return l.status == BranchStatus::Pass || l.status == BranchStatus::NoSolutions;
  });
}

std::vector<TreeRunReport> verify_trees(const std::string& family) {
  std::vector<TreeRunReport> out;
  for (auto& tree : load_trees(family)) {
    for (auto& sample : tree.samples) {
      TreeRunReport run;
      run.family = family;
      run.tree = tree.name;
      run.params = sample;
      auto g = catalog(family, family_params(family, sample));
      auto fields = tree.generic ? generic_fields(family, sample) : fundamental_fields(g, 2);
      for (auto& leaf : tree.leaves) {
        bool present = eval_condition(leaf.when, sample);
        if (!present && !leaf.otherwise_empty) {
          ++run.skipped;
          continue;
        }
        auto branch = parse_branch(leaf.locus, sample, leaf.label);
        if (leaf.empty || !present) {
          auto r = verify_empty_branch(g, branch);
          if (!present) r.label += " (absent here)";
          run.leaves.push_back(std::move(r));
          continue;
        }
        std::vector<Vec> given;
        if (!leaf.rep.empty()) given.push_back(parse_bivector(leaf.rep, kDim, sample));
        run.leaves.push_back(verify_branch(g, fields, branch, given));
      }
      out.push_back(std::move(run));
    }
  }
  return out;
}

}  // namespace dlie
