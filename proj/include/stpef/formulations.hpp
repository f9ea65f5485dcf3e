#ifndef STPEF_FORMULATIONS_HPP
#define STPEF_FORMULATIONS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stpef/extform.hpp"
#include "stpef/planar.hpp"
#include "stpef/surface.hpp"

namespace stpef {

// One construction step in a build ledger: exact row/column accounting plus
// the closed-form row count it instantiates.
struct SizeStage {
  std::string name;
  long inequalities = 0;
  long equalities = 0;
  long aux = 0;
  std::string formula;
};

struct SizeReport {
  std::vector<SizeStage> stages;
  std::vector<int> deleted_vertices;  // X when a deletion pipeline ran
  int genus_hint = -1;                // -1 when not applicable
  int apex_k = -1;                    // |X| when a deletion pipeline ran
  bool edge_bound_ok = true;          // |E| <= k(n-1)+max(0,3(n-k)-6) for k-apex
  std::vector<std::string> warnings;

  long final_size() const { return stages.empty() ? 0 : stages.back().inequalities; }
};

// LP effort spent inside lift closures (they are the only stateful part of a
// formulation; everything else is an immutable rational matrix).
struct LiftStats {
  long solves = 0;
  long pivots = 0;
};

// A formulation together with its build ledger and, when the construction
// knows one, a lift: a map from a 0/1 vertex of the projection to the
// auxiliary block of a feasible point. Lifts that dualize an inner LP share a
// warm-started tableau, so a bundle's lift is not safe to call concurrently.
struct EfBundle {
  ExtForm ef;
  std::string provenance;
  std::vector<SizeStage> stages;
  std::vector<std::string> warnings;
  std::function<RatVec(const RatVec&)> lift;
  std::shared_ptr<LiftStats> lift_stats = std::make_shared<LiftStats>();
};

// ---- building blocks ----------------------------------------------------

// Subgraph polytope: conv{(chi^S, chi^F) : S subseteq V, F subseteq E(S)}.
// Labels v0..v{n-1}, e0..e{m-1}; rows 0 <= y_e, y_e <= x_u, y_e <= x_v,
// x_v <= 1, plus -x_v <= 0 for isolated vertices (without which the system
// is unbounded). Size 3m + n (+ #isolated). No auxiliaries.
EfBundle subp_ef(const Multigraph& g);

// Spanning tree polytope via per-root orientation variables z_{k,(i,j)}.
// Labels e0..e{m-1} (or `edge_labels`); aux column k*2m + d for root k and
// dart d. Size 2nm. Requires a connected graph.
EfBundle martin_stp(const Multigraph& g, const std::vector<std::string>& edge_labels = {});

// Spanning tree polytope from a planar embedding: one variable per primal arc
// and per dual arc, out-degree rows with primal root 0 and dual root f0 (the
// first traced face incident to vertex 0). Labels e0..e{m-1} (or
// `edge_labels`); aux columns 4e+0,4e+1 for the primal arcs of edge e (dart
// order) and 4e+2,4e+3 for its dual arcs. Size 4m. Requires a connected
// loop-free graph with a genus-0 rotation.
EfBundle williams_stp(const EmbeddedGraph& h, const std::vector<std::string>& edge_labels = {});

// Forest polytope (graphic matroid independence polytope): per-component
// planar stp formulations (quadratic fallback, with a warning, for a
// non-planar component), product, then monotonize. Labels are `edge_labels`
// (default e0..e{m-1}) grouped by component. Size sum_i(4 m_i) + 2m for
// all-planar input.
EfBundle forest_ef(const Multigraph& h, const std::vector<std::string>& edge_labels = {});

// Non-empty subgraph polytope of a planar graph H (any number of
// components): subp rows plus the dualized forest cut
// max{ q . f : q in forest polytope } <= s(V) - 1. Labels v./e. as subp_ef.
// Size size(subp) + size(forest) + 1.
EfBundle nesubp_planar_ef(const Multigraph& h);

// Balas union of the embedded nesubp(G-X) piece (dropped when X = V) and,
// per v in X, the face x_v = 1 of subp(G). `inner` must be a formulation of
// nesubp(G-X) already carrying G's labels (v{i}/e{j} of the kept vertices
// and edges). Size size(inner) + |X|(3m+n) + #parts.
EfBundle nesubp_deletion_ef(const Multigraph& g, const std::vector<int>& x,
                            const std::optional<EfBundle>& inner);

// Spanning tree polytope from a nesubp formulation: dualize
// max{ x(F) - s(S) : (s,f) in nesubp(G) } <= -1, add x >= 0, and cut with
// sum_e x_e = n - 1. Labels e0..e{m-1}. Size size(inner) + 1 + m.
EfBundle stp_from_nesubp(const Multigraph& g, const EfBundle& inner);

// ---- pipelines -----------------------------------------------------------

struct PipelineResult {
  EfBundle bundle;
  SizeReport report;
};

// G -> (planarizing set X unless supplied) -> nesubp_planar_ef(G-X) ->
// nesubp_deletion_ef -> stp_from_nesubp. Throws if G is disconnected or
// G - X is not planar.
PipelineResult bounded_genus_stp(const Multigraph& g, int genus,
                                 std::optional<std::vector<int>> x = std::nullopt,
                                 PlanarizerStrategy strategy = PlanarizerStrategy::bfs_layers,
                                 std::uint64_t seed = 0);

// Same pipeline with a caller-supplied apex set; the report records whether
// |E| respects the k-apex edge bound k(n-1) + max(0, 3(n-k) - 6).
PipelineResult kapex_stp(const Multigraph& g, const std::vector<int>& x);

}  // namespace stpef

#endif
