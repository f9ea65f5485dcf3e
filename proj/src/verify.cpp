#include "stpef/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "stpef/corpus.hpp"
#include "stpef/extform.hpp"
#include "stpef/planar.hpp"

namespace stpef {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::bounded(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

SplitMix64 trial_rng(std::uint64_t seed, long trial) {
  return SplitMix64{seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1)};
}

const char* status_name(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    default: return "unbounded";
  }
}

std::string mask_str(int mask, int n) {
  std::string out = "{";
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string edge_list_str(const std::vector<int>& edges) {
  std::string out = "{";
  for (size_t i = 0; i < edges.size(); ++i)
    out += (i ? ",e" : "e") + std::to_string(edges[i]);
  return out + "}";
}

std::vector<int> label_cols(const ExtForm& ef, char prefix, int count, int offset = 0) {
  std::vector<int> cols;
  for (int j = 0; j < count; ++j)
    cols.push_back(x_index(ef, prefix + std::to_string(j + offset)));
  return cols;
}

void start_report(VerificationReport& rep, const EfBundle& b, const std::string& graph_id,
                  const char* mode) {
  rep.graph_id = graph_id;
  rep.construction = b.provenance;
  rep.mode = mode;
  rep.inequalities = b.ef.size();
  rep.equalities = static_cast<long>(b.ef.eqs.size());
  rep.aux = b.ef.aux_count;
}

void finish_report(VerificationReport& rep, const EfBundle& b, long lift_s0, long lift_p0) {
  rep.lift_lp_solves = b.lift_stats->solves - lift_s0;
  rep.pivots += b.lift_stats->pivots - lift_p0;
  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
}

// True when the x block is literally e0..e{m-1} (so the bundle's lift speaks
// the verifier's coordinates).
bool stp_conforming(const EfBundle& b, int m) {
  if (!b.lift || b.ef.nx() != m) return false;
  for (int j = 0; j < m; ++j)
    if (b.ef.x_labels[j] != "e" + std::to_string(j)) return false;
  return true;
}

// Shared tableau over the formulation, warm-started at a lifted spanning
// tree whenever the bundle can lift one: a feasible start turns phase 1 into
// a basis factorization with no search. Falls back to a cold start.
SimplexTableau stp_tableau(const EfBundle& b, const Multigraph& g, bool conforming,
                           LPProblem base) {
  if (conforming) {
    try {
      RatVec x(g.m(), Rat(0));
      for (int e : kruskal_mst(g, Weighting(g.m(), Rat(0))).tree_edges) x[e] = 1;
      RatVec aux = b.lift(x);
      if (static_cast<int>(aux.size()) == b.ef.aux_count) {
        RatVec full = x;
        full.insert(full.end(), aux.begin(), aux.end());
        return SimplexTableau(std::move(base), full);
      }
    } catch (const std::exception&) {
    }
  }
  return SimplexTableau(std::move(base));
}

}  // namespace

VerificationReport verify_stp_exact(const EfBundle& b, const Multigraph& g,
                                    const std::string& graph_id) {
  if (g.n > 12) throw std::invalid_argument("verify_stp_exact: |V| <= 12 required");
  if (!is_connected(g)) throw std::invalid_argument("verify_stp_exact: G must be connected");
  const int n = g.n, m = g.m();
  VerificationReport rep;
  start_report(rep, b, graph_id, "exact");
  long lift_s0 = b.lift_stats->solves, lift_p0 = b.lift_stats->pivots;
  auto ecol = label_cols(b.ef, 'e', m);
  bool conforming = stp_conforming(b, m);
  LPProblem base = ef_lp(b.ef);

  // (a) every spanning tree is in the projection
  auto trees = enumerate_spanning_trees(g);
  {
    CheckResult c{"tree-feasibility", true, "", ""};
    long done = 0;
    for (const auto& t : trees) {
      RatVec x(m, Rat(0));
      for (int e : t) x[e] = 1;
      std::string why;
      bool ok = false;
      if (conforming) {
        try {
          RatVec aux = b.lift(x);
          if (static_cast<int>(aux.size()) != b.ef.aux_count) {
            why = "lift returned a wrong-sized auxiliary block";
          } else {
            RatVec full = x;
            full.insert(full.end(), aux.begin(), aux.end());
            ok = lp_feasible_point(base, full);
            if (!ok) why = "lifted point violates the formulation";
          }
        } catch (const std::exception& ex) {
          why = std::string("lift failed: ") + ex.what();
        }
      } else {
        LPProblem p = base;
        for (int j = 0; j < m; ++j) p.eqs.push_back(make_row({{ecol[j], Rat(1)}}, x[j]));
        auto sol = lp_solve(p);
        ++rep.lp_solves;
        rep.pivots += sol.pivots;
        ok = sol.status == LPStatus::optimal;
        if (!ok) why = "no feasible completion of the pinned e block";
      }
      ++done;
      if (!ok) {
        c.pass = false;
        c.counterexample = "tree " + edge_list_str(t) + ": " + why;
        break;
      }
    }
    c.detail = std::to_string(done) + "/" + std::to_string(trees.size()) +
               " spanning trees feasible" + (conforming ? " via lift" : " via pinned LPs");
    rep.checks.push_back(c);
  }

  // (b)(c)(d) share one warm-started tableau over the formulation
  SimplexTableau tab = stp_tableau(b, g, conforming, base);
  auto run = [&](const RatVec& obj, Sense sense) {
    auto sol = sense == Sense::maximize ? tab.resolve(Sense::maximize, obj)
                                        : tab.resolve(Sense::minimize, obj);
    ++rep.lp_solves;
    rep.pivots += sol.pivots;
    return sol;
  };

  {
    CheckResult c{"subtour", true, "", ""};
    long lps = 0;
    for (int mask = 1; mask < (1 << n) && c.pass; ++mask) {
      RatVec obj(b.ef.dim(), Rat(0));
      int sz = 0;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) ++sz;
      for (int e = 0; e < m; ++e)
        if ((mask >> g.edges[e].first & 1) && (mask >> g.edges[e].second & 1))
          obj[ecol[e]] = 1;
      auto sol = run(obj, Sense::maximize);
      ++lps;
      if (sol.status != LPStatus::optimal) {
        c.pass = false;
        c.counterexample =
            "S=" + mask_str(mask, n) + ": LP " + status_name(sol.status);
      } else if (sol.value > sz - 1) {
        c.pass = false;
        c.counterexample = "S=" + mask_str(mask, n) + ": max x(E(S)) = " + rat_str(sol.value) +
                           " > " + std::to_string(sz - 1);
      }
    }
    rep.subtour_lps = lps;
    c.detail = std::to_string(lps) + " subtour LPs";
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"nonnegativity", true, "", ""};
    for (int e = 0; e < m && c.pass; ++e) {
      RatVec obj(b.ef.dim(), Rat(0));
      obj[ecol[e]] = 1;
      auto sol = run(obj, Sense::minimize);
      if (sol.status != LPStatus::optimal || sol.value < 0) {
        c.pass = false;
        c.counterexample = "min x_e" + std::to_string(e) + " = " +
                           (sol.status == LPStatus::optimal ? rat_str(sol.value)
                                                            : status_name(sol.status));
      }
    }
    c.detail = std::to_string(m) + " edge minima checked";
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"degree-sum", true, "", ""};
    RatVec obj(b.ef.dim(), Rat(0));
    for (int e = 0; e < m; ++e) obj[ecol[e]] = 1;
    for (Sense sense : {Sense::maximize, Sense::minimize}) {
      if (!c.pass) break;
      auto sol = run(obj, sense);
      if (sol.status != LPStatus::optimal || sol.value != n - 1) {
        c.pass = false;
        c.counterexample = std::string(sense == Sense::maximize ? "max" : "min") + " x(E) = " +
                           (sol.status == LPStatus::optimal ? rat_str(sol.value)
                                                            : status_name(sol.status)) +
                           " != " + std::to_string(n - 1);
      }
    }
    c.detail = "x(E) pinned to " + std::to_string(n - 1);
    rep.checks.push_back(c);
  }

  finish_report(rep, b, lift_s0, lift_p0);
  return rep;
}

VerificationReport verify_stp_sampled(const EfBundle& b, const Multigraph& g,
                                      const std::string& graph_id, long trials,
                                      std::uint64_t seed) {
  if (!is_connected(g)) throw std::invalid_argument("verify_stp_sampled: G must be connected");
  const int m = g.m();
  VerificationReport rep;
  start_report(rep, b, graph_id, "sampled");
  rep.seed = seed;
  rep.trials = trials;
  long lift_s0 = b.lift_stats->solves, lift_p0 = b.lift_stats->pivots;
  auto ecol = label_cols(b.ef, 'e', m);
  bool conforming = stp_conforming(b, m);
  LPProblem base = ef_lp(b.ef);
  // Non-conforming bundles share one warm tableau. Conforming ones get a
  // fresh tableau per trial, started at the trial's own lifted optimum: the
  // factorization stays sparse and the solve only has to prove optimality,
  // which is far cheaper than dragging one basis through 100 objectives.
  std::optional<SimplexTableau> shared;
  if (!conforming) shared.emplace(base);

  CheckResult c{"sampled-mst", true, "", ""};
  long done = 0;
  for (long t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    Weighting w;
    for (int e = 0; e < m; ++e) w.push_back(Rat(rng.bounded(-1000, 1000)));
    auto mst = kruskal_mst(g, w);
    RatVec obj(b.ef.dim(), Rat(0));
    for (int e = 0; e < m; ++e) obj[ecol[e]] = w[e];
    LPSolution sol;
    if (conforming) {
      RatVec x(m, Rat(0));
      for (int e : mst.tree_edges) x[e] = 1;
      RatVec full = x;
      try {
        RatVec aux = b.lift(x);
        full.insert(full.end(), aux.begin(), aux.end());
      } catch (const std::exception&) {
        full = x;  // wrong-length start, ctor falls back to a cold one
      }
      SimplexTableau fresh(base, full);
      sol = fresh.resolve(Sense::minimize, obj);
    } else {
      sol = shared->resolve(Sense::minimize, obj);
    }
    ++rep.lp_solves;
    rep.pivots += sol.pivots;
    ++done;
    if (sol.status != LPStatus::optimal || sol.value != mst.weight) {
      c.pass = false;
      std::string got =
          sol.status == LPStatus::optimal ? rat_str(sol.value) : status_name(sol.status);
      std::string ws;
      for (int e = 0; e < m; ++e) ws += (e ? "," : "") + rat_str(w[e]);
      c.counterexample = "trial " + std::to_string(t) + ": lp min = " + got +
                         ", kruskal = " + rat_str(mst.weight) + ", weights = [" + ws + "]";
      break;
    }
  }
  c.detail = std::to_string(done) + "/" + std::to_string(trials) + " weightings matched kruskal";
  rep.checks.push_back(c);
  finish_report(rep, b, lift_s0, lift_p0);
  return rep;
}

VerificationReport verify_nesubp(const EfBundle& b, const Multigraph& g,
                                 const std::string& graph_id, std::uint64_t seed) {
  if (g.n > 6) throw std::invalid_argument("verify_nesubp: |V| <= 6 required");
  const int n = g.n, m = g.m();
  VerificationReport rep;
  start_report(rep, b, graph_id, "nesubp");
  rep.seed = seed;
  long lift_s0 = b.lift_stats->solves, lift_p0 = b.lift_stats->pivots;
  auto vcol = label_cols(b.ef, 'v', n);
  auto ecol = label_cols(b.ef, 'e', m);
  bool conforming = b.lift && b.ef.nx() == n + m;
  for (int i = 0; i < n && conforming; ++i) conforming = vcol[i] == i;
  for (int j = 0; j < m && conforming; ++j) conforming = ecol[j] == n + j;
  LPProblem base = ef_lp(b.ef);

  std::vector<int> edge_mask(1 << n, 0);
  for (int mask = 0; mask < (1 << n); ++mask)
    for (int e = 0; e < m; ++e)
      if ((mask >> g.edges[e].first & 1) && (mask >> g.edges[e].second & 1))
        edge_mask[mask] |= 1 << e;

  {
    CheckResult c{"vertex-feasibility", true, "", ""};
    long done = 0;
    for (int smask = 1; smask < (1 << n) && c.pass; ++smask) {
      int em = edge_mask[smask];
      for (int fmask = em;; fmask = (fmask - 1) & em) {
        RatVec x(b.ef.nx(), Rat(0));
        for (int v = 0; v < n; ++v)
          if (smask >> v & 1) x[vcol[v]] = 1;
        for (int e = 0; e < m; ++e)
          if (fmask >> e & 1) x[ecol[e]] = 1;
        std::string why;
        bool ok = false;
        if (conforming) {
          try {
            RatVec aux = b.lift(x);
            if (static_cast<int>(aux.size()) != b.ef.aux_count) {
              why = "lift returned a wrong-sized auxiliary block";
            } else {
              RatVec full = x;
              full.insert(full.end(), aux.begin(), aux.end());
              ok = lp_feasible_point(base, full);
              if (!ok) why = "lifted point violates the formulation";
            }
          } catch (const std::exception& ex) {
            why = std::string("lift failed: ") + ex.what();
          }
        } else {
          LPProblem p = base;
          for (int i = 0; i < n; ++i)
            p.eqs.push_back(make_row({{vcol[i], Rat(1)}}, Rat(smask >> i & 1)));
          for (int e = 0; e < m; ++e)
            p.eqs.push_back(make_row({{ecol[e], Rat(1)}}, Rat(fmask >> e & 1)));
          auto sol = lp_solve(p);
          ++rep.lp_solves;
          rep.pivots += sol.pivots;
          ok = sol.status == LPStatus::optimal;
          if (!ok) why = "no feasible completion";
        }
        ++done;
        if (!ok) {
          c.pass = false;
          std::vector<int> fe;
          for (int e = 0; e < m; ++e)
            if (fmask >> e & 1) fe.push_back(e);
          c.counterexample =
              "S=" + mask_str(smask, n) + " F=" + edge_list_str(fe) + ": " + why;
          break;
        }
        if (fmask == 0) break;
      }
    }
    c.detail = std::to_string(done) + " subgraph pairs checked" +
               (conforming ? " via lift" : " via pinned LPs");
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"origin-excluded", true, "", ""};
    LPProblem p = base;
    for (int i = 0; i < n; ++i) p.eqs.push_back(make_row({{vcol[i], Rat(1)}}, Rat(0)));
    for (int e = 0; e < m; ++e) p.eqs.push_back(make_row({{ecol[e], Rat(1)}}, Rat(0)));
    auto sol = lp_solve(p);
    ++rep.lp_solves;
    rep.pivots += sol.pivots;
    if (sol.status != LPStatus::infeasible) {
      c.pass = false;
      c.counterexample = "the empty subgraph is feasible (LP " +
                         std::string(status_name(sol.status)) + ")";
    }
    c.detail = "empty subgraph must be cut off";
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"random-directions", true, "", ""};
    SimplexTableau tab(base);
    long done = 0;
    for (long t = 0; t < 200 && c.pass; ++t) {
      auto rng = trial_rng(seed, t);
      std::vector<long> cv, ce;
      for (int i = 0; i < n; ++i) cv.push_back(rng.bounded(-9, 9));
      for (int e = 0; e < m; ++e) ce.push_back(rng.bounded(-9, 9));
      // enumerated maximum: per S take every positive-weight edge inside
      long best = 0;
      bool first = true;
      for (int smask = 1; smask < (1 << n); ++smask) {
        long val = 0;
        for (int i = 0; i < n; ++i)
          if (smask >> i & 1) val += cv[i];
        for (int e = 0; e < m; ++e)
          if ((edge_mask[smask] >> e & 1) && ce[e] > 0) val += ce[e];
        if (first || val > best) best = val;
        first = false;
      }
      RatVec obj(b.ef.dim(), Rat(0));
      for (int i = 0; i < n; ++i) obj[vcol[i]] = Rat(cv[i]);
      for (int e = 0; e < m; ++e) obj[ecol[e]] = Rat(ce[e]);
      auto sol = tab.resolve(Sense::maximize, obj);
      ++rep.lp_solves;
      rep.pivots += sol.pivots;
      ++done;
      if (sol.status != LPStatus::optimal || sol.value != best) {
        c.pass = false;
        std::string got =
            sol.status == LPStatus::optimal ? rat_str(sol.value) : status_name(sol.status);
        std::string cs;
        for (int i = 0; i < n; ++i) cs += (i ? "," : "") + std::to_string(cv[i]);
        for (int e = 0; e < m; ++e) cs += "," + std::to_string(ce[e]);
        c.counterexample = "direction " + std::to_string(t) + ": lp max = " + got +
                           ", vertex max = " + std::to_string(best) + ", c = [" + cs + "]";
      }
    }
    c.detail = std::to_string(done) + "/200 directions matched the vertex maximum";
    rep.checks.push_back(c);
  }

  finish_report(rep, b, lift_s0, lift_p0);
  return rep;
}

MutatedEf mutate_ef(const ExtForm& ef, std::uint64_t seed) {
  long ni = static_cast<long>(ef.ineqs.size());
  long rows = ni + static_cast<long>(ef.eqs.size());
  check(rows > 0, "mutate_ef: the formulation has no rows");
  SplitMix64 rng{seed};
  long r = rng.bounded(0, rows - 1);
  MutatedEf out{ef, ""};
  SparseRow& row = r < ni ? out.ef.ineqs[r] : out.ef.eqs[r - ni];
  long slots = static_cast<long>(row.terms.size());
  long s = rng.bounded(0, slots);  // slot `slots` is the rhs
  Rat delta = rng.bounded(0, 1) == 0 ? Rat(1) : Rat(-1);
  std::string where = (r < ni ? "ineq " + std::to_string(r) : "eq " + std::to_string(r - ni));
  std::string sign = delta == 1 ? "+1" : "-1";
  if (s < slots) {
    row.terms[s].second += delta;
    out.description = where + " col " + std::to_string(row.terms[s].first) + " " + sign;
    if (row.terms[s].second == 0)  // keep the no-stored-zeros invariant
      row.terms.erase(row.terms.begin() + s);
  } else {
    row.rhs += delta;
    out.description = where + " rhs " + sign;
  }
  return out;
}

std::string bench_family(const std::string& family, int kmin, int kmax,
                         const std::vector<std::string>& methods, bool timing) {
  for (const auto& mth : methods)
    if (mth != "subp" && mth != "martin" && mth != "williams" && mth != "nesubp" &&
        mth != "genus")
      throw std::invalid_argument("bench_family: unknown method " + mth);
  if (family != "torus-grid" && family != "planar-grid" && family != "complete")
    throw std::invalid_argument("bench_family: unknown family " + family);

  std::ostringstream csv;
  csv << "family,k,n,m,g,x";
  for (const auto& mth : methods) csv << "," << mth;
  csv << ",build_ms\n";

  for (int k = kmin; k <= kmax; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Multigraph g;
    int genus = 0;
    if (family == "torus-grid") {
      g = torus_grid(k).graph;
      genus = 1;
    } else if (family == "planar-grid") {
      g = planar_grid(k);
    } else {
      g = complete_graph(k);
      genus = k >= 3 ? ((k - 3) * (k - 4) + 11) / 12 : 0;
    }
    std::string xcell = "-";
    std::vector<std::string> cells;
    for (const auto& mth : methods) {
      if (mth == "subp") {
        cells.push_back(std::to_string(subp_ef(g).ef.size()));
      } else if (mth == "martin") {
        cells.push_back(is_connected(g) ? std::to_string(martin_stp(g).ef.size()) : "-");
      } else if (mth == "williams") {
        auto pr = is_planar(g);
        cells.push_back(pr.planar && is_connected(g)
                            ? std::to_string(williams_stp({g, pr.rotation}).ef.size())
                            : "-");
      } else if (mth == "nesubp") {
        cells.push_back(is_planar(g).planar ? std::to_string(nesubp_planar_ef(g).ef.size())
                                            : "-");
      } else {
        if (is_connected(g)) {
          auto r = bounded_genus_stp(g, genus);
          xcell = std::to_string(r.report.apex_k);
          cells.push_back(std::to_string(r.bundle.ef.size()));
        } else {
          cells.push_back("-");
        }
      }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    csv << family << "," << k << "," << g.n << "," << g.m() << "," << genus << "," << xcell;
    for (const auto& cell : cells) csv << "," << cell;
    csv << "," << (timing ? ms : 0) << "\n";
  }
  return csv.str();
}

}  // namespace stpef
