#ifndef STPEF_VERIFY_HPP
#define STPEF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stpef/formulations.hpp"
#include "stpef/graph.hpp"

namespace stpef {

// Deterministic RNG (splitmix64). Every randomized check derives the state
// for trial t from `seed` and t alone, so single trials can be replayed.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
  long bounded(long lo, long hi);  // uniform-ish in [lo, hi] by modulo
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::string counterexample;  // empty when the check passes
};

// One verification run against one graph. `pass` is the conjunction of the
// checks; LP/pivot counters cover both the verifier's own LPs and any LPs
// the bundle's lift solved on its behalf.
struct VerificationReport {
  std::string graph_id;
  std::string construction;  // provenance of the verified formulation
  std::string mode;          // "exact" | "sampled" | "nesubp"
  std::uint64_t seed = 0;
  long trials = 0;
  long inequalities = 0;
  long equalities = 0;
  long aux = 0;
  std::vector<CheckResult> checks;
  long lp_solves = 0;
  long lift_lp_solves = 0;
  long pivots = 0;
  long subtour_lps = 0;  // size of the subtour family solved in exact mode
  long timing_ms = 0;    // kept at 0 so reports are byte-reproducible
  bool pass = true;
};

// Brute-force certification of a claimed stp(G) formulation, |V| <= 12:
//   (a) tree-feasibility: every spanning tree lifts to a feasible point (or,
//       without a usable lift, is LP-feasible with the e block pinned),
//   (b) subtour: max x(E(S)) <= |S|-1 for all 2^n - 1 nonempty S, one
//       warm-started tableau,
//   (c) nonnegativity: min x_e >= 0 per edge,
//   (d) degree-sum: max and min of x(E) both equal n-1.
// The formulation must carry labels e0..e{m-1}; extra x labels are treated
// as auxiliaries (projected out).
VerificationReport verify_stp_exact(const EfBundle& b, const Multigraph& g,
                                    const std::string& graph_id);

// Randomized certification: per trial, integer weights in [-1000, 1000], LP
// minimum over the formulation vs. exact Kruskal. Stops at the first mismatch.
VerificationReport verify_stp_sampled(const EfBundle& b, const Multigraph& g,
                                      const std::string& graph_id, long trials,
                                      std::uint64_t seed);

// Brute-force certification of a claimed nesubp(G) formulation, |V| <= 6:
//   (a) vertex-feasibility over all (chi^S, chi^F), S nonempty, F <= E(S),
//   (b) origin-excluded: the all-zero point is infeasible,
//   (c) random-directions: 200 seeded objectives with coefficients in
//       [-9, 9]; warm LP maximum vs. enumerated vertex maximum.
// Labels v0..v{n-1}, e0..e{m-1} must all be present.
VerificationReport verify_nesubp(const EfBundle& b, const Multigraph& g,
                                 const std::string& graph_id, std::uint64_t seed = 0);

struct MutatedEf {
  ExtForm ef;
  std::string description;  // which row/slot moved and by how much
};

// Seeded single-coefficient perturbation: one row (inequalities then
// equalities), one slot (each stored term, then the rhs), +1 or -1. The
// verifiers are expected to catch almost every such mutant.
MutatedEf mutate_ef(const ExtForm& ef, std::uint64_t seed);

// CSV size table: header family,k,n,m,g,x,<methods...>,build_ms and one row
// per k in [kmin, kmax]. Families: torus-grid (C_k x C_k), planar-grid,
// complete. Methods: subp, martin, williams, nesubp, genus; a method that
// does not apply to an instance prints "-". The x column is the apex count
// |X| of the genus pipeline ("-" unless genus ran). Construction only - no
// LPs; build_ms stays 0 unless `timing`.
std::string bench_family(const std::string& family, int kmin, int kmax,
                         const std::vector<std::string>& methods, bool timing);

}  // namespace stpef

#endif
