#ifndef STPEF_EXTFORM_HPP
#define STPEF_EXTFORM_HPP

#include <string>
#include <vector>

#include "stpef/lp.hpp"

namespace stpef {

// Extended formulation of a polyhedron P in the labeled x variables:
//   P = { x : exists aux with A(x,aux) <= b, C(x,aux) = d }.
// Columns 0..nx-1 are the x block (one per label, in order), columns
// nx..nx+aux_count-1 the auxiliary block. The size of a formulation is its
// number of inequalities; equalities are free.
struct ExtForm {
  std::vector<std::string> x_labels;
  int aux_count = 0;
  std::vector<SparseRow> ineqs;
  std::vector<SparseRow> eqs;
  std::string note;

  int nx() const { return static_cast<int>(x_labels.size()); }
  int dim() const { return nx() + aux_count; }
  long size() const { return static_cast<long>(ineqs.size()); }
};

// Checks label uniqueness and that every row's columns lie inside dim().
void validate_ef(const ExtForm& ef);

// Column of the given x label; throws std::invalid_argument if absent.
int x_index(const ExtForm& ef, const std::string& label);

// The formulation as a feasibility LP (zero objective) over all dim() columns,
// inequalities and equalities in the formulation's own row order (so LP duals
// index formulation rows one-to-one).
LPProblem ef_lp(const ExtForm& ef);

// Exact membership of x in the projection: solves one feasibility LP with the
// x block pinned.
bool ef_contains_x(const ExtForm& ef, const RatVec& x);

// ---- calculus ----------------------------------------------------------
// Each operation states its column layout; lifts rely on these layouts.

// Same x labels, conjunction of constraints. Columns: [x | a.aux | b.aux];
// rows: a's then b's within each family. Size |a| + |b|.
ExtForm intersect(const ExtForm& a, const ExtForm& b);

// Cartesian product on disjoint label sets.
// Columns: [a.x | b.x | a.aux | b.aux]. Size |a| + |b|.
ExtForm product(const ExtForm& a, const ExtForm& b);

// Adds the equality row (over full columns) to cut P with a hyperplane;
// intended for supporting hyperplanes, where the result is a face of P.
// Size unchanged.
ExtForm face_restrict(ExtForm ef, SparseRow eq);

// Re-embeds P into the larger label space `target`, fixing every label not
// present in the source to zero (one new equality per such label). Every
// source label must appear in `target`. Columns: [target x | aux]. Size
// unchanged.
ExtForm embed_zero(const ExtForm& ef, const std::vector<std::string>& target);

// { x : 0 <= x <= z for some z in P }, for a polytope P living in the
// nonnegative orthant. The x block keeps the labels; the old x block moves
// into the auxiliary part. Columns: [x | z (old x) | old aux].
// Size |P| + 2 nx.
ExtForm monotonize(const ExtForm& ef);

// Convex hull of a union of nonempty polytopes over identical x labels
// (Balas). Per part i, homogenized copies: A_i x_i + B_i y_i <= lambda_i b_i
// and C_i x_i + D_i y_i = lambda_i d_i, with x = sum x_i, sum lambda_i = 1,
// lambda_i >= 0. Columns: [x | x_0 y_0 | x_1 y_1 | ... | lambda_0..k-1].
// Inequality order: parts' rows in part order, then the k lambda bounds.
// Equality order: parts' rows, then the nx linking rows, then sum lambda = 1.
// Size sum |P_i| + k.
ExtForm balas_union(const std::vector<ExtForm>& parts);

// Robust counterpart: the set of x (over `outer_labels`) satisfying
//   max { sum_j dir_j(x) * q_j : (q, y) in inner } <= budget(x),
// where dir_j(x) = directions[j].terms . x + directions[j].rhs (one affine
// direction per inner x column) and budget(x) = budget.terms . x + budget.rhs.
// The inner maximum is dualized: with multipliers lambda (inner inequalities)
// and mu (inner equalities),
//   lambda >= 0                                (|inner| rows, inner order)
//   lambda.b + mu.d <= budget(x)               (1 row)
//   A^T lambda + C^T mu = dir(x)  on the inner x block    (equalities)
//   B^T lambda + D^T mu = 0       on the inner aux block  (equalities)
// Columns: [outer x | lambda | mu]. Size |inner| + 1. Exact when the inner
// polyhedron is a nonempty polytope (strong duality).
ExtForm robust_counterpart(const ExtForm& inner, const std::vector<std::string>& outer_labels,
                           const std::vector<SparseRow>& directions, const SparseRow& budget);

}  // namespace stpef

#endif
