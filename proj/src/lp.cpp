#include "stpef/lp.hpp"

#include <algorithm>
#include <climits>

namespace stpef {

SparseRow make_row(std::vector<std::pair<int, Rat>> terms, Rat rhs) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow r;
  r.rhs = std::move(rhs);
  for (auto& [c, q] : terms) {
    if (!r.terms.empty() && r.terms.back().first == c)
      r.terms.back().second += q;
    else
      r.terms.push_back({c, std::move(q)});
  }
  std::erase_if(r.terms, [](const auto& t) { return t.second == 0; });
  return r;
}

Rat row_dot(const SparseRow& r, const RatVec& v) {
  Rat s(0);
  for (const auto& [c, q] : r.terms) {
    check(c >= 0 && c < static_cast<int>(v.size()), "row_dot: column out of range");
    s += q * v[c];
  }
  return s;
}

namespace {

// Sorted sparse vector over tableau columns.
using SparseVec = std::vector<std::pair<int, Rat>>;

Rat get_coeff(const SparseVec& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& t, int c) { return t.first < c; });
  if (it != v.end() && it->first == col) return it->second;
  return Rat(0);
}

// dst += f * src, keeping the sorted no-zero invariant.
void axpy(SparseVec& dst, const Rat& f, const SparseVec& src) {
  SparseVec out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Rat q = f * src[j].second;
      if (q != 0) out.push_back({src[j].first, std::move(q)});
      ++j;
    } else {
      Rat q = dst[i].second + f * src[j].second;
      if (q != 0) out.push_back({dst[i].first, std::move(q)});
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

// Degenerate pivots use Dantzig pricing with a fill-reducing tie-break; after
// a long zero-progress streak the rule switches to Bland's (smallest indices),
// which provably terminates, until the next improving step.
constexpr long kBlandAfter = 150;

}  // namespace

// Bounded-variable exact simplex. Rows with a single structural term become
// column bounds instead of tableau rows, so the tableau only carries rows
// with two or more terms; nonbasic columns rest at a bound (or at zero when
// free) and can move to the opposite bound without a basis change. Multipliers
// for the bound-defining rows are recovered from reduced costs, so every
// original row still receives its dual value.
struct SimplexTableau::Impl {
  LPProblem prob;
  int nvar = 0;
  int nineq = 0;  // original inequality count
  int neq = 0;    // original equality count

  // Per structural column: bounds plus the original rows that define them
  // (the first row to state each strictly tightest bound wins).
  struct Bound {
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    int lo_row = -1, hi_row = -1;  // original row index; >= nineq means equality
  };
  std::vector<Bound> bnd;

  int ntab = 0;              // tableau rows
  std::vector<int> orig_of;  // tableau row -> original row index
  int first_slack = 0;
  int first_art = 0;
  int ncols = 0;

  std::vector<int> flip;     // +1 / -1 applied to tableau row i during setup
  std::vector<int> reader;   // row -> column whose reduced cost carries y_i
  std::vector<SparseVec> T;  // tableau rows (current basis inverse applied)
  RatVec bval;               // current value of each row's basic variable
  std::vector<int> basis;    // row -> basic column
  std::vector<bool> active;
  std::vector<bool> in_basis;  // per column
  std::vector<bool> is_art;    // per column

  std::vector<bool> col_has_lo, col_has_hi;  // per column, slacks/arts included
  RatVec col_lo, col_hi;
  RatVec val;  // current value of every nonbasic column

  RatVec robj;  // dense reduced costs z_j - c_j
  RatVec cost;  // current internal column costs (phase-dependent)

  bool phase1_done = false;
  bool infeasible = false;
  LPSolution infeasible_solution;  // cached once certified
  long pivots_total = 0;

  Impl(LPProblem p, const RatVec* start) : prob(std::move(p)) {
    nvar = prob.nvar;
    check(static_cast<int>(prob.objective.size()) == nvar, "lp: objective length mismatch");
    nineq = static_cast<int>(prob.ineqs.size());
    neq = static_cast<int>(prob.eqs.size());
    bnd.resize(nvar);

    // Presolve: empty rows are consistency checks, singleton rows become
    // bounds, everything else becomes a tableau row.
    std::vector<int> tab_rows;
    for (int i = 0; i < nineq + neq && !infeasible; ++i) {
      const SparseRow& src = i < nineq ? prob.ineqs[i] : prob.eqs[i - nineq];
      for (const auto& [c, q] : src.terms)
        check(c >= 0 && c < nvar, "lp: coefficient column out of range");
      if (src.terms.empty()) {
        if (i < nineq ? src.rhs < 0 : src.rhs != 0) empty_row_infeasible(i);
      } else if (src.terms.size() == 1) {
        add_bound(i, src.terms[0].first, src.terms[0].second, src.rhs);
      } else {
        tab_rows.push_back(i);
      }
    }
    if (infeasible) {
      phase1_done = true;
      return;
    }

    ntab = static_cast<int>(tab_rows.size());
    orig_of = tab_rows;
    first_slack = nvar;
    first_art = first_slack + ntab;  // at most one logical pair per row
    flip.assign(ntab, 1);
    reader.assign(ntab, -1);
    T.assign(ntab, {});
    bval.assign(ntab, Rat(0));
    basis.assign(ntab, -1);
    active.assign(ntab, true);

    // Initial nonbasic values: the requested start coordinate when it fits
    // the column's bounds, else the lower bound, else the upper bound, else
    // zero. A feasible start leaves every artificial at zero, so phase 1
    // reduces to factoring a basis out of the equality rows.
    if (start && static_cast<int>(start->size()) != nvar) start = nullptr;
    col_has_lo.assign(first_art, false);
    col_has_hi.assign(first_art, false);
    col_lo.assign(first_art, Rat(0));
    col_hi.assign(first_art, Rat(0));
    val.assign(first_art, Rat(0));
    for (int j = 0; j < nvar; ++j) {
      col_has_lo[j] = bnd[j].has_lo;
      col_has_hi[j] = bnd[j].has_hi;
      if (bnd[j].has_lo) col_lo[j] = bnd[j].lo;
      if (bnd[j].has_hi) col_hi[j] = bnd[j].hi;
      if (start && (!bnd[j].has_lo || (*start)[j] >= bnd[j].lo) &&
          (!bnd[j].has_hi || (*start)[j] <= bnd[j].hi)) {
        val[j] = (*start)[j];
      } else {
        val[j] = bnd[j].has_lo ? bnd[j].lo : (bnd[j].has_hi ? bnd[j].hi : Rat(0));
      }
    }

    int nart = 0;
    std::vector<SparseVec> rows(ntab);
    std::vector<int> art_col(ntab, -1);
    for (int t = 0; t < ntab; ++t) {
      int i = orig_of[t];
      const SparseRow& src = i < nineq ? prob.ineqs[i] : prob.eqs[i - nineq];
      SparseVec row;
      Rat residual = src.rhs;
      for (const auto& [c, q] : src.terms) {
        row.push_back({c, q});
        residual -= q * val[c];
      }
      bool is_ineq = i < nineq;
      if (is_ineq) row.push_back({first_slack + t, Rat(1)});
      if (residual < 0) {
        flip[t] = -1;
        residual = -residual;
        for (auto& [c, q] : row) q = -q;
      }
      if (is_ineq && flip[t] == 1) {
        basis[t] = first_slack + t;  // the slack absorbs the residual
        reader[t] = first_slack + t;
      } else {
        art_col[t] = nart++;
      }
      rows[t] = std::move(row);
      bval[t] = std::move(residual);
    }
    ncols = first_art + nart;
    col_has_lo.resize(ncols, false);
    col_has_hi.resize(ncols, false);
    col_lo.resize(ncols, Rat(0));
    col_hi.resize(ncols, Rat(0));
    val.resize(ncols, Rat(0));
    for (int c = first_slack; c < ncols; ++c) col_has_lo[c] = true;  // logicals >= 0
    is_art.assign(ncols, false);
    in_basis.assign(ncols, false);
    for (int t = 0; t < ntab; ++t) {
      if (art_col[t] >= 0) {
        int art = first_art + art_col[t];
        rows[t].push_back({art, Rat(1)});
        basis[t] = art;
        reader[t] = art;
        is_art[art] = true;
      }
      std::sort(rows[t].begin(), rows[t].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::erase_if(rows[t], [](const auto& term) { return term.second == 0; });
      T[t] = std::move(rows[t]);
      in_basis[basis[t]] = true;
    }
  }

  // Records the bound implied by singleton row `row` (a * x_j <= / == b) and
  // certifies infeasibility when it contradicts an earlier bound.
  void add_bound(int row, int j, const Rat& a, const Rat& rhs) {
    Bound& B = bnd[j];
    Rat v = rhs / a;
    bool is_eq = row >= nineq;
    if (is_eq || a < 0) {  // lower side
      if (B.has_hi && v > B.hi) {
        bound_conflict(j, row, v, B.hi_row, B.hi);
        return;
      }
      if (!B.has_lo || v > B.lo) {
        B.has_lo = true;
        B.lo = v;
        B.lo_row = row;
      }
    }
    if (is_eq || a > 0) {  // upper side
      if (B.has_lo && v < B.lo) {
        bound_conflict(j, B.lo_row, B.lo, row, v);
        return;
      }
      if (!B.has_hi || v < B.hi) {
        B.has_hi = true;
        B.hi = v;
        B.hi_row = row;
      }
    }
  }

  Rat singleton_coeff(int row) const {
    const SparseRow& src = row < nineq ? prob.ineqs[row] : prob.eqs[row - nineq];
    check(src.terms.size() == 1, "lp: bound row is not a singleton");
    return src.terms[0].second;
  }

  // Farkas certificate for x_j >= lo (from row lo_row) vs x_j <= hi (from row
  // hi_row) with lo > hi: scale the lower row to -x <= -lo and the upper row
  // to x <= hi; the sum is 0 <= hi - lo < 0.
  void bound_conflict(int j, int lo_row, const Rat& lo, int hi_row, const Rat& hi) {
    (void)j;
    RatVec lambda(nineq, Rat(0)), mu(neq, Rat(0));
    Rat alo = singleton_coeff(lo_row), ahi = singleton_coeff(hi_row);
    if (lo_row < nineq)
      lambda[lo_row] = Rat(-1) / alo;
    else
      mu[lo_row - nineq] = Rat(-1) / alo;
    if (hi_row < nineq)
      lambda[hi_row] = Rat(1) / ahi;
    else
      mu[hi_row - nineq] = Rat(1) / ahi;
    check(hi - lo < 0, "lp: bound conflict is not a conflict");
    finish_infeasible(std::move(lambda), std::move(mu));
  }

  void empty_row_infeasible(int row) {
    RatVec lambda(nineq, Rat(0)), mu(neq, Rat(0));
    if (row < nineq)
      lambda[row] = Rat(1);  // 0 <= rhs < 0
    else
      mu[row - nineq] = prob.eqs[row - nineq].rhs > 0 ? Rat(-1) : Rat(1);
    finish_infeasible(std::move(lambda), std::move(mu));
  }

  // Validates and caches a Farkas certificate:
  // sum lambda_i a_i + sum mu_k c_k = 0, lambda >= 0, sum multipliers*rhs < 0.
  void finish_infeasible(RatVec lambda, RatVec mu) {
    RatVec combo(nvar, Rat(0));
    Rat rhs_combo(0);
    for (int i = 0; i < nineq; ++i) {
      check(lambda[i] >= 0, "infeasibility certificate: negative multiplier");
      if (lambda[i] == 0) continue;
      for (const auto& [c, q] : prob.ineqs[i].terms) combo[c] += lambda[i] * q;
      rhs_combo += lambda[i] * prob.ineqs[i].rhs;
    }
    for (int k = 0; k < neq; ++k) {
      if (mu[k] == 0) continue;
      for (const auto& [c, q] : prob.eqs[k].terms) combo[c] += mu[k] * q;
      rhs_combo += mu[k] * prob.eqs[k].rhs;
    }
    for (const Rat& q : combo) check(q == 0, "infeasibility certificate: nonzero combination");
    check(rhs_combo < 0, "infeasibility certificate: nonnegative right-hand side");
    infeasible = true;
    infeasible_solution.status = LPStatus::infeasible;
    infeasible_solution.ineq_duals = std::move(lambda);
    infeasible_solution.eq_duals = std::move(mu);
  }

  void pivot(int pr, int pc, int dir, const Rat& t, bool leave_at_hi) {
    Rat w = get_coeff(T[pr], pc);
    check(w != 0, "simplex: zero pivot");
    Rat step = Rat(dir) * t;
    Rat venter = val[pc] + step;
    int lv = basis[pr];
    val[lv] = leave_at_hi ? col_hi[lv] : col_lo[lv];
    in_basis[lv] = false;
    if (w != 1) {
      Rat inv = Rat(1) / w;
      for (auto& [c, q] : T[pr]) q *= inv;
    }
    for (int r = 0; r < ntab; ++r) {
      if (r == pr || !active[r]) continue;
      Rat f = get_coeff(T[r], pc);
      if (f == 0) continue;
      if (step != 0) {
        bval[r] -= step * f;
        check((!col_has_lo[basis[r]] || bval[r] >= col_lo[basis[r]]) &&
                  (!col_has_hi[basis[r]] || bval[r] <= col_hi[basis[r]]),
              "simplex: basic value left its bounds");
      }
      axpy(T[r], -f, T[pr]);
    }
    bval[pr] = std::move(venter);
    basis[pr] = pc;
    in_basis[pc] = true;
    const Rat f0 = robj[pc];
    if (f0 != 0)
      for (const auto& [c, q] : T[pr]) robj[c] -= f0 * q;
    ++pivots_total;
  }

  // Moves nonbasic pc by t in direction dir onto one of its own bounds; the
  // basis is unchanged and the objective strictly improves.
  void bound_flip(int pc, int dir, const Rat& t) {
    Rat step = Rat(dir) * t;
    val[pc] += step;
    for (int r = 0; r < ntab; ++r) {
      if (!active[r]) continue;
      Rat f = get_coeff(T[r], pc);
      if (f == 0) continue;
      bval[r] -= step * f;
      check((!col_has_lo[basis[r]] || bval[r] >= col_lo[basis[r]]) &&
                (!col_has_hi[basis[r]] || bval[r] <= col_hi[basis[r]]),
            "simplex: basic value left its bounds");
    }
    ++pivots_total;
  }

  // Reduced costs for the internal costs in `cost`, evaluated at the current
  // basis. Used at each phase start and for every warm restart.
  void rebuild_objective_row() {
    robj.assign(ncols, Rat(0));
    for (int i = 0; i < ntab; ++i) {
      if (!active[i]) continue;
      const Rat& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (const auto& [c, q] : T[i]) robj[c] += cb * q;
    }
    for (int c = 0; c < ncols; ++c) robj[c] -= cost[c];
  }

  bool col_fixed(int c) const { return col_has_lo[c] && col_has_hi[c] && col_lo[c] == col_hi[c]; }

  // Returns {entering column, direction}, or {-1, 0} at optimum. Artificial
  // columns never re-enter.
  std::pair<int, int> pick_entering(bool bland) const {
    int best = -1, best_dir = 0;
    for (int c = 0; c < ncols; ++c) {
      if (in_basis[c] || is_art[c] || col_fixed(c)) continue;
      const Rat& d = robj[c];
      int dir = 0;
      bool atlo = col_has_lo[c] && val[c] == col_lo[c];
      bool athi = col_has_hi[c] && val[c] == col_hi[c];
      if (atlo) {
        if (d < 0) dir = 1;
      } else if (athi) {
        if (d > 0) dir = -1;
      } else if (d != 0) {
        dir = d < 0 ? 1 : -1;  // free column resting at zero
      }
      if (dir == 0) continue;
      if (bland) return {c, dir};
      if (best == -1 || (dir > 0 ? -d : d) > (best_dir > 0 ? -robj[best] : robj[best])) {
        best = c;
        best_dir = dir;
      }
    }
    return {best, best_dir};
  }

  struct RatioHit {
    enum Kind { kRay, kFlip, kRow } kind = kRay;
    int row = -1;
    Rat t;
    bool leave_at_hi = false;
  };

  // Bounded-variable ratio test: the entering column moves by t >= 0 in
  // direction dir until a basic variable hits one of its bounds or the column
  // reaches its own opposite bound (a bound flip).
  RatioHit ratio_test(int pc, int dir, bool bland) const {
    RatioHit hit;
    if (dir > 0 ? col_has_hi[pc] : col_has_lo[pc]) {
      hit.kind = RatioHit::kFlip;
      hit.t = dir > 0 ? col_hi[pc] - val[pc] : val[pc] - col_lo[pc];
    }
    for (int r = 0; r < ntab; ++r) {
      if (!active[r]) continue;
      Rat w = get_coeff(T[r], pc);
      if (w == 0) continue;
      Rat rate = Rat(dir) * w;
      int bc = basis[r];
      Rat t;
      bool at_hi;
      if (rate > 0) {  // the basic variable decreases
        if (!col_has_lo[bc]) continue;
        t = (bval[r] - col_lo[bc]) / rate;
        at_hi = false;
      } else {  // the basic variable increases
        if (!col_has_hi[bc]) continue;
        t = (col_hi[bc] - bval[r]) / -rate;
        at_hi = true;
      }
      if (hit.kind != RatioHit::kRay && t > hit.t) continue;
      if (hit.kind == RatioHit::kRow && t == hit.t) {
        if (bland) {
          if (basis[r] >= basis[hit.row]) continue;
        } else {
          // fill-reducing tie-break: sparser pivot row, then smaller basic
          size_t sr = T[r].size(), sb = T[hit.row].size();
          if (sr > sb || (sr == sb && basis[r] >= basis[hit.row])) continue;
        }
      } else if (hit.kind == RatioHit::kFlip && t == hit.t) {
        continue;  // prefer the cheaper bound flip
      }
      hit.kind = RatioHit::kRow;
      hit.row = r;
      hit.t = std::move(t);
      hit.leave_at_hi = at_hi;
    }
    return hit;
  }

  // Pivots until optimal (returns {-1, 0}) or unbounded (returns the ray
  // column and its direction).
  std::pair<int, int> run_simplex() {
    long stall = 0;
    while (true) {
      auto [pc, dir] = pick_entering(stall >= kBlandAfter);
      if (pc == -1) return {-1, 0};
      RatioHit hit = ratio_test(pc, dir, stall >= kBlandAfter);
      if (hit.kind == RatioHit::kRay) return {pc, dir};
      if (hit.kind == RatioHit::kFlip) {
        bound_flip(pc, dir, hit.t);
        stall = 0;
        continue;
      }
      bool degenerate = hit.t == 0;
      pivot(hit.row, pc, dir, hit.t, hit.leave_at_hi);
      stall = degenerate ? stall + 1 : 0;
    }
  }

  // y_i = reduced cost of row i's reader column plus that column's cost.
  Rat dual_y(int i) const { return robj[reader[i]] + cost[reader[i]]; }

  // Multiplier for the bound row that keeps nonbasic column j at its value,
  // recovered from the leftover reduced cost g = c_j - y * A_j.
  void assign_bound_dual(int j, const Rat& g, RatVec& lambda, RatVec& mu) const {
    if (g == 0) return;
    const Bound& B = bnd[j];
    bool atlo = B.has_lo && val[j] == B.lo;
    bool athi = B.has_hi && val[j] == B.hi;
    int row;
    if (athi && B.hi_row >= nineq) {
      row = B.hi_row;  // an equality definer absorbs either sign
    } else if (atlo && B.lo_row >= nineq) {
      row = B.lo_row;
    } else if (g > 0) {
      check(athi, "lp duals: positive reduced cost away from the upper bound");
      row = B.hi_row;
    } else {
      check(atlo, "lp duals: negative reduced cost away from the lower bound");
      row = B.lo_row;
    }
    Rat mult = g / singleton_coeff(row);
    if (row < nineq)
      lambda[row] = mult;
    else
      mu[row - nineq] = mult;
  }

  Rat basic_artificial_sum() const {
    Rat s(0);
    for (int r = 0; r < ntab; ++r)
      if (active[r] && is_art[basis[r]]) s += bval[r];
    return s;
  }

  void phase1() {
    if (basic_artificial_sum() > 0) {
      cost.assign(ncols, Rat(0));
      for (int c = first_art; c < ncols; ++c)
        if (is_art[c]) cost[c] = -1;
      rebuild_objective_row();
      auto [ray, dir] = run_simplex();
      (void)dir;
      check(ray == -1, "simplex: phase 1 cannot be unbounded");
      if (basic_artificial_sum() > 0) {
        RatVec lambda(nineq, Rat(0)), mu(neq, Rat(0));
        for (int t = 0; t < ntab; ++t) {
          if (!active[t]) continue;
          Rat v = Rat(flip[t]) * dual_y(t);
          int i = orig_of[t];
          if (i < nineq)
            lambda[i] = v;
          else
            mu[i - nineq] = v;
        }
        for (int j = 0; j < nvar; ++j)
          if (!in_basis[j]) assign_bound_dual(j, -robj[j], lambda, mu);
        finish_infeasible(std::move(lambda), std::move(mu));
        phase1_done = true;
        return;
      }
    } else {
      // Feasible from the start: no phase-1 objective is ever priced.
      cost.assign(ncols, Rat(0));
      robj.assign(ncols, Rat(0));
    }
    drive_out_artificials();
    phase1_done = true;
  }

  // Pivots every zero-valued basic artificial out (or deactivates its row as
  // implied by the others). This is a pure factorization: every pivot has
  // t = 0. Rows are taken sparsest-first and entering columns favor small
  // support, which keeps fill-in down like sparse elimination ordering.
  void drive_out_artificials() {
    std::vector<int> support;
    int since_refresh = INT_MAX;
    while (true) {
      int pr = -1;
      size_t best_size = 0;
      for (int r = 0; r < ntab; ++r) {
        if (!active[r] || !is_art[basis[r]]) continue;
        if (pr == -1 || T[r].size() < best_size) {
          pr = r;
          best_size = T[r].size();
        }
      }
      if (pr == -1) return;
      check(bval[pr] == 0, "simplex: artificial basic at a nonzero value");
      if (since_refresh >= 32) {
        support.assign(ncols, 0);
        for (int r = 0; r < ntab; ++r) {
          if (!active[r]) continue;
          for (const auto& [c, q] : T[r]) ++support[c];
        }
        since_refresh = 0;
      }
      int col = -1, col_support = INT_MAX;
      for (const auto& [c, q] : T[pr]) {
        if (!is_art[c] && support[c] < col_support) {
          col = c;
          col_support = support[c];
        }
      }
      if (col == -1) {
        active[pr] = false;  // the row is implied by the others
      } else {
        pivot(pr, col, 1, Rat(0), false);
        ++since_refresh;
      }
    }
  }

  RatVec effective_objective(Sense sense, const RatVec& objective) const {
    check(static_cast<int>(objective.size()) == nvar, "lp: objective length mismatch");
    RatVec c_eff = objective;
    if (sense == Sense::minimize)
      for (Rat& q : c_eff) q = -q;
    return c_eff;
  }

  LPSolution optimize(Sense sense, const RatVec& objective) {
    long pivots_at_entry = pivots_total;
    if (!phase1_done) phase1();
    if (infeasible) {
      LPSolution s = infeasible_solution;
      s.pivots = pivots_total - pivots_at_entry;
      return s;
    }
    RatVec c_eff = effective_objective(sense, objective);
    cost.assign(ncols, Rat(0));
    for (int j = 0; j < nvar; ++j) cost[j] = c_eff[j];
    rebuild_objective_row();
    auto [ray_col, ray_dir] = run_simplex();

    LPSolution s;
    s.pivots = pivots_total - pivots_at_entry;
    if (ray_col != -1) {
      certify_unbounded(ray_col, ray_dir, c_eff);
      s.status = LPStatus::unbounded;
      return s;
    }
    s.status = LPStatus::optimal;
    s.point.assign(nvar, Rat(0));
    for (int j = 0; j < nvar; ++j)
      if (!in_basis[j]) s.point[j] = val[j];
    for (int r = 0; r < ntab; ++r)
      if (active[r] && basis[r] < nvar) s.point[basis[r]] = bval[r];
    s.value = 0;
    for (int j = 0; j < nvar; ++j) s.value += objective[j] * s.point[j];
    s.ineq_duals.assign(nineq, Rat(0));
    s.eq_duals.assign(neq, Rat(0));
    for (int t = 0; t < ntab; ++t) {
      if (!active[t]) continue;  // implied row: multiplier stays zero
      Rat v = Rat(flip[t]) * dual_y(t);
      int i = orig_of[t];
      if (i < nineq)
        s.ineq_duals[i] = v;
      else
        s.eq_duals[i - nineq] = v;
    }
    for (int j = 0; j < nvar; ++j)
      if (!in_basis[j]) assign_bound_dual(j, -robj[j], s.ineq_duals, s.eq_duals);
    certify_optimal(s, c_eff);
    return s;
  }

  void certify_optimal(const LPSolution& s, const RatVec& c_eff) const {
    for (const auto& row : prob.ineqs)
      check(row_dot(row, s.point) <= row.rhs, "optimality certificate: primal inequality violated");
    for (const auto& row : prob.eqs)
      check(row_dot(row, s.point) == row.rhs, "optimality certificate: primal equality violated");
    RatVec combo(nvar, Rat(0));
    Rat rhs_combo(0);
    for (int i = 0; i < nineq; ++i) {
      check(s.ineq_duals[i] >= 0, "optimality certificate: negative inequality multiplier");
      if (s.ineq_duals[i] == 0) continue;
      for (const auto& [c, q] : prob.ineqs[i].terms) combo[c] += s.ineq_duals[i] * q;
      rhs_combo += s.ineq_duals[i] * prob.ineqs[i].rhs;
    }
    for (int k = 0; k < neq; ++k) {
      if (s.eq_duals[k] == 0) continue;
      for (const auto& [c, q] : prob.eqs[k].terms) combo[c] += s.eq_duals[k] * q;
      rhs_combo += s.eq_duals[k] * prob.eqs[k].rhs;
    }
    Rat primal_eff(0);
    for (int j = 0; j < nvar; ++j) {
      check(combo[j] == c_eff[j], "optimality certificate: dual combination misses the objective");
      primal_eff += c_eff[j] * s.point[j];
    }
    check(rhs_combo == primal_eff, "optimality certificate: duality gap");
  }

  void certify_unbounded(int pc, int dir, const RatVec& c_eff) const {
    RatVec w(nvar, Rat(0));
    if (pc < nvar) w[pc] = dir;
    for (int r = 0; r < ntab; ++r) {
      if (!active[r] || basis[r] >= nvar) continue;
      Rat a = get_coeff(T[r], pc);
      if (a != 0) w[basis[r]] = Rat(-dir) * a;
    }
    for (const auto& row : prob.ineqs) {
      Rat d(0);
      for (const auto& [c, q] : row.terms) d += q * w[c];
      check(d <= 0, "unboundedness certificate: ray leaves an inequality");
    }
    for (const auto& row : prob.eqs) {
      Rat d(0);
      for (const auto& [c, q] : row.terms) d += q * w[c];
      check(d == 0, "unboundedness certificate: ray leaves an equality");
    }
    Rat gain(0);
    for (int j = 0; j < nvar; ++j) gain += c_eff[j] * w[j];
    check(gain > 0, "unboundedness certificate: ray does not improve");
  }
};

SimplexTableau::SimplexTableau(LPProblem p) : impl_(std::make_unique<Impl>(std::move(p), nullptr)) {}

SimplexTableau::SimplexTableau(LPProblem p, const RatVec& start)
    : impl_(std::make_unique<Impl>(std::move(p), &start)) {}
SimplexTableau::~SimplexTableau() = default;
SimplexTableau::SimplexTableau(SimplexTableau&&) noexcept = default;
SimplexTableau& SimplexTableau::operator=(SimplexTableau&&) noexcept = default;

LPSolution SimplexTableau::solve() { return impl_->optimize(impl_->prob.sense, impl_->prob.objective); }

LPSolution SimplexTableau::resolve(Sense sense, const RatVec& objective) {
  return impl_->optimize(sense, objective);
}

long SimplexTableau::total_pivots() const { return impl_->pivots_total; }

LPSolution lp_solve(const LPProblem& p) { return SimplexTableau(p).solve(); }

bool lp_feasible_point(const LPProblem& p, const RatVec& v) {
  check(static_cast<int>(v.size()) == p.nvar, "lp_feasible_point: dimension mismatch");
  for (const auto& row : p.ineqs)
    if (row_dot(row, v) > row.rhs) return false;
  for (const auto& row : p.eqs)
    if (row_dot(row, v) != row.rhs) return false;
  return true;
}

}  // namespace stpef
