#ifndef STPEF_LP_HPP
#define STPEF_LP_HPP

#include <memory>
#include <utility>
#include <vector>

#include "stpef/rational.hpp"

namespace stpef {

// Sparse linear expression: terms strictly ascending by column, no stored
// zeros. Paired with a right-hand side it is one constraint row.
struct SparseRow {
  std::vector<std::pair<int, Rat>> terms;
  Rat rhs;
};

// Sorts, merges duplicate columns, and drops zero coefficients.
SparseRow make_row(std::vector<std::pair<int, Rat>> terms, Rat rhs);

Rat row_dot(const SparseRow& r, const RatVec& v);

enum class Sense { minimize, maximize };
enum class LPStatus { optimal, infeasible, unbounded };

// Optimize objective.v over { v : ineqs (a.v <= rhs), eqs (a.v == rhs) }.
// All variables are free; variable bounds belong in `ineqs`.
struct LPProblem {
  int nvar = 0;
  Sense sense = Sense::maximize;
  RatVec objective;  // length nvar
  std::vector<SparseRow> ineqs;
  std::vector<SparseRow> eqs;
};

// Exact optimum with a certificate that is verified before returning. Duals
// are stated for the maximization of c_eff, where c_eff = objective when
// maximizing and -objective when minimizing:
//   ineq_duals >= 0,
//   sum_i ineq_duals[i]*ineqs[i].terms + sum_k eq_duals[k]*eqs[k].terms = c_eff,
//   sum_i ineq_duals[i]*ineqs[i].rhs  + sum_k eq_duals[k]*eqs[k].rhs  = c_eff.point.
// `value` is objective.point (the problem's own sense). Infeasibility and
// unboundedness are certified internally (Farkas vector / improving ray).
struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  RatVec point;
  Rat value;
  RatVec ineq_duals;
  RatVec eq_duals;
  long pivots = 0;  // pivots spent by this call
};

// Exact sparse two-phase bounded-variable simplex. Rows with one term are
// presolved into column bounds; nonbasic columns rest at a bound (or between
// them) and can jump to the opposite bound without changing the basis.
// Entering column: most improving reduced cost, switching to Bland's rule
// after a run of degenerate pivots (so the walk terminates); leaving row:
// minimum ratio, ties to the sparsest pivot row. Fully deterministic. One
// tableau can be re-solved under fresh objectives, keeping the previous
// basis as a warm start.
class SimplexTableau {
 public:
  explicit SimplexTableau(LPProblem p);
  // Starts the walk at `start`, which should be feasible for p: phase 1 then
  // degenerates into a basis factorization with no search. An infeasible or
  // wrong-length start silently falls back to the default cold start.
  SimplexTableau(LPProblem p, const RatVec& start);
  ~SimplexTableau();
  SimplexTableau(SimplexTableau&&) noexcept;
  SimplexTableau& operator=(SimplexTableau&&) noexcept;

  // The first call pays for phase 1; later calls reuse the basis.
  LPSolution solve();
  LPSolution resolve(Sense sense, const RatVec& objective);

  long total_pivots() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

LPSolution lp_solve(const LPProblem& p);

// Exact substitution: does v satisfy every constraint of p?
bool lp_feasible_point(const LPProblem& p, const RatVec& v);

}  // namespace stpef

#endif
