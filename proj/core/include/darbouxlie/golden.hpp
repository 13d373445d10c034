#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "darbouxlie/darboux.hpp"
#include "darbouxlie/liealg.hpp"

// Readers for the golden data shipped under data/: Schouten tables, Darboux trees,
// orbit tables (with automorphism witnesses and coboundary classes) and the
// reference Yang-Baxter systems.

namespace dlie {

struct GoldenDataMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// $DARBOUXLIE_DATA when set, else the directory configured at build time.
std::string data_dir();
// data_dir()/kind/family.txt; throws GoldenDataMissing when absent.
std::string data_file(const std::string& kind, const std::string& family);

// Conditions on parameters: atoms "lhs==rhs", "lhs!=rhs", "lhs<rhs", "lhs>rhs",
// joined by "&&" (binds tighter) and "||".  Empty text is true.  Throws ParseError.
bool eval_condition(std::string_view cond, const Params& p);
// "alpha=1/2 beta=-1" -> map.
Params parse_assignments(std::string_view text);
// Restricts to the parameters the catalog family takes (drops auxiliaries such as k).
Params family_params(const std::string& family, const Params& p);
std::string format_params(const Params& p);

// One data line: "keyword head ; key=value ; ..." where head is "label : body" or "label".
struct Record {
  std::string keyword, label, body;
  std::map<std::string, std::string> fields;
  int line = 0;
  std::string field(const std::string& k, const std::string& def = "") const;
};
Record parse_record(std::string_view line, int lineno = 0);
std::vector<Record> read_records(const std::string& path);

// "f=0, g=h | p!=0, q>0, s<0"; polynomials in x1.. and the parameters.
TreeBranch parse_branch(std::string_view text, const Params& p, std::string label = "");
Inequality parse_inequality(std::string_view text, const Params& p);
// Bivector coordinates of an expression like "e12 + 2*e34" (the text "0" is the zero bivector).
Vec parse_bivector(std::string_view text, int n, const Params& p);

// --- Schouten tables --------------------------------------------------------

struct SchoutenEntry {
  std::string left, right, value, section;
  int line = 0;
};
std::vector<SchoutenEntry> load_schouten_table(const std::string& family);
// Parameter grid on which the symbolic table is compared; three values per parameter,
// enough to pin down entries of degree <= 2 in each parameter.
std::vector<Params> schouten_samples(const std::string& family);

// --- Darboux trees ----------------------------------------------------------

struct TreeLeaf {
  std::string label;
  std::string locus;       // "eqs | ineqs"
  bool empty = false;      // "No solutions" leaf
  std::string when;        // parameter condition for the leaf to exist
  bool otherwise_empty = false;  // when the condition fails the leaf is verified empty
  std::string rep;         // optional extra sample
  int line = 0;
};

struct TreeSpec {
  std::string name;
  std::vector<Params> samples;
  // Fields from the derivations generic in the parameters ("fields generic").
  bool generic = false;
  std::vector<TreeLeaf> leaves;
};
std::vector<TreeSpec> load_trees(const std::string& family);

// --- Orbit tables -----------------------------------------------------------

struct OrbitRowSpec {
  std::string label, locus, rep, star = "0", when;
  int dim = -1;
  int line = 0;
};
struct AutSpec {
  std::string name;
  std::vector<std::string> rows;  // matrix rows, entries separated by spaces or commas
};
struct MergeSpec {  // the image of rep(from) under the lifted automorphism lies in locus(to)
  std::string from, to, aut, when;
  int line = 0;
};
struct ClassSpec {
  std::string name, when;
  std::vector<std::string> members;
  int line = 0;
};
struct LinkSpec {  // same_coboundary(rep(from), rep(to), aut)
  std::string from, to, aut, when;
  int line = 0;
};
struct UnwitnessedSpec {
  std::string label, reason, when;
};
struct OrbitBlock {
  std::string name;
  std::vector<Params> samples;
  std::vector<OrbitRowSpec> rows;
  std::vector<AutSpec> auts;
  std::vector<MergeSpec> merges;
  std::vector<ClassSpec> classes;
  std::vector<LinkSpec> links;
  std::vector<UnwitnessedSpec> unwitnessed;
  const OrbitRowSpec* row(const std::string& label) const;
  const AutSpec* aut(const std::string& name) const;
};
std::vector<OrbitBlock> load_orbit_table(const std::string& family);
RatMatrix instantiate_aut(const AutSpec& a, int n, const Params& p);

// --- Reference Yang-Baxter systems -------------------------------------------

struct YbeSystemSpec {
  std::string kind;  // "mcybe" or "cybe"
  std::string when;
  std::vector<std::string> polys;
};
struct YbeReference {
  std::vector<Params> samples;
  std::vector<YbeSystemSpec> systems;
};
YbeReference load_ybe_reference(const std::string& family);

}  // namespace dlie
