#pragma once

#include <map>
#include <string>
#include <vector>

#include "darbouxlie/darboux.hpp"
#include "darbouxlie/golden.hpp"
#include "darbouxlie/yangbaxter.hpp"

// Verification harness for the published tables: Schouten brackets, Yang-Baxter
// systems, orbit tables (representatives, dimensions, CYBE status), automorphism
// witnesses, coboundary classes and Darboux trees.

namespace dlie {

// --- Schouten tables ----------------------------------------------------------

struct SchoutenReport {
  std::string family;
  std::size_t entries = 0;   // table lines
  std::size_t checks = 0;    // entries x parameter samples
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};
SchoutenReport verify_schouten_table(const std::string& family);

// --- Yang-Baxter loci ----------------------------------------------------------

struct LocusComparison {
  std::string family, kind;  // kind: "mcybe" or "cybe"
  Params params;
  std::vector<Poly> computed, reference;
  // How each containment was certified: "ideal", "radical", "real", or "" when it failed.
  std::string reference_in_computed, computed_in_reference;
  std::size_t points = 0, on_locus = 0, disagreements = 0;
  bool pass() const {
    return !reference_in_computed.empty() && !computed_in_reference.empty() && disagreements == 0;
  }
};
// Both containments at cofactor degree <= 2 (directly, for squares, or after the real-locus
// simplification), then agreement of vanishing at `random_points` random points plus
// points sampled on each locus.
std::vector<LocusComparison> compare_ybe_locus(const std::string& family, int random_points = 10000);

// --- Orbit tables --------------------------------------------------------------

struct OrbitRecordResult {
  std::string block, label;
  Params params;
  Vec rep;
  std::string rep_source;  // "table", "image under <aut>", "sampled"
  int expected_dim = -1, computed_dim = -1;
  bool in_locus = false, mcybe = false, cybe = false, star = false, cocycle = false;
  std::vector<std::string> failures;
  bool dim_ok() const { return expected_dim == computed_dim; }
  bool star_ok() const { return mcybe && cybe == !star; }
  bool pass() const { return failures.empty(); }
};

struct OrbitTableReport {
  std::string family;
  std::vector<OrbitRecordResult> records;
  bool pass() const;
};
// Throws GoldenDataMissing when the family has no table.
OrbitTableReport verify_orbit_table(const std::string& family);

// Lambda^2 T r_from lies in the locus of `to`.  Throws NotAnAutomorphism.
bool verify_automorphism_witness(const LieAlgebra& g, const RatMatrix& t, const Vec& r_from, const TreeBranch& to);

// --- Coboundary classes ---------------------------------------------------------

struct WitnessResult {
  std::string block, kind, from, to, aut;  // kind: "merge" or "link"
  Params params;
  bool ok = false;
  std::string detail;
};
struct ClassResult {
  std::string block, name;
  Params params;
  std::vector<std::string> members;
  std::vector<std::string> unwitnessed;  // members not reached from the first by verified links
  bool links_ok = true;
};
struct CoboundaryReport {
  std::string family;
  std::vector<WitnessResult> witnesses;
  std::vector<ClassResult> classes;
  std::vector<std::string> unwitnessed;  // human-readable list
  bool pass() const;  // every shipped witness verifies (unwitnessed groupings are reported, not failures)
};
CoboundaryReport verify_coboundary_classes(const std::string& family);

// --- Darboux trees ----------------------------------------------------------------

struct TreeRunReport {
  std::string family, tree;
  Params params;
  std::vector<BranchReport> leaves;
  std::size_t skipped = 0;  // leaves whose parameter condition fails (and carry no emptiness claim)
  bool pass() const;
};
std::vector<TreeRunReport> verify_trees(const std::string& family);

// Derivations of the family at p that extend to nearby parameters: the limit at p of
// Der(g(q)) for q -> p along a generic line.  Equals Der(g(p)) off the special loci.
std::vector<RatMatrix> generic_derivation_basis(const std::string& family, const Params& p);
std::vector<LinearVectorField> generic_fields(const std::string& family, const Params& p, int m = 2);

// Derivations shared by g and h (same underlying space), lifted to Lambda^m.
std::vector<LinearVectorField> shared_fields(const LieAlgebra& g, const LieAlgebra& h, int m = 2);

// Representatives per row label for one block and parameter sample, resolving rows without a
// printed representative through merge witnesses (or a sampled locus point as a last resort).
struct EffectiveRep {
  Vec rep;
  std::string source;
};
std::map<std::string, EffectiveRep> effective_reps(const LieAlgebra& g, const OrbitBlock& block, const Params& p);

}  // namespace dlie
