#include "stpef/formulations.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

namespace stpef {

namespace {

std::string vlabel(int i) { return "v" + std::to_string(i); }
std::string elabel(int j) { return "e" + std::to_string(j); }

std::vector<std::string> default_elabels(int m) {
  std::vector<std::string> out;
  out.reserve(m);
  for (int j = 0; j < m; ++j) out.push_back(elabel(j));
  return out;
}

// The vertex a dart sits at: end 0 at first, end 1 at second.
int dart_at(const Multigraph& g, Dart d) {
  const auto& e = g.edges[dart_edge(d)];
  return dart_end(d) == 0 ? e.first : e.second;
}

std::vector<std::vector<Dart>> darts_by_vertex(const Multigraph& g) {
  std::vector<std::vector<Dart>> at(g.n);
  for (int e = 0; e < g.m(); ++e) {
    at[g.edges[e].first].push_back(make_dart(e, 0));
    at[g.edges[e].second].push_back(make_dart(e, 1));
  }
  return at;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Edge indices with x = 1; rejects anything that is not a 0/1 vector.
std::vector<int> edge_set_of(const RatVec& x) {
  std::vector<int> out;
  for (size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 1)
      out.push_back(static_cast<int>(j));
    else
      check(x[j] == 0, "lift: x is not a 0/1 vector");
  }
  return out;
}

// Re-runs an inner lift while crediting its LP effort to `mine` as well.
std::function<RatVec(const RatVec&)> adopt_lift(std::function<RatVec(const RatVec&)> inner,
                                                std::shared_ptr<LiftStats> inner_stats,
                                                std::shared_ptr<LiftStats> mine) {
  if (!inner) return nullptr;
  return [inner = std::move(inner), inner_stats = std::move(inner_stats),
          mine = std::move(mine)](const RatVec& x) {
    long s0 = inner_stats->solves, p0 = inner_stats->pivots;
    RatVec out = inner(x);
    mine->solves += inner_stats->solves - s0;
    mine->pivots += inner_stats->pivots - p0;
    return out;
  };
}

SizeStage stage_of(const std::string& name, const ExtForm& ef, std::string formula) {
  return {name, static_cast<long>(ef.ineqs.size()), static_cast<long>(ef.eqs.size()),
          static_cast<long>(ef.aux_count), std::move(formula)};
}

// Tail dart of the tree arc child -> parent for the (loop-free) edge e.
Dart arc_from(const Multigraph& g, int e, int child) {
  return make_dart(e, g.edges[e].first == child ? 0 : 1);
}

// Orients the spanning tree `tree` toward `root`: out[i] = the dart at i of
// i's parent edge, for every i != root.
std::vector<Dart> orient_toward(const Multigraph& g, const std::vector<int>& tree, int root) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // vertex -> (other, edge)
  for (int e : tree) {
    auto [u, v] = g.edges[e];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<Dart> out(g.n, -1);
  std::vector<bool> seen(g.n, false);
  std::queue<int> q;
  q.push(root);
  seen[root] = true;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [u, e] : adj[v]) {
      if (seen[u]) continue;
      seen[u] = true;
      ++reached;
      out[u] = arc_from(g, e, u);
      q.push(u);
    }
  }
  check(reached == g.n, "lift: edge set is not spanning");
  return out;
}

}  // namespace

EfBundle subp_ef(const Multigraph& g) {
  int n = g.n, m = g.m();
  EfBundle b;
  b.ef.x_labels.reserve(n + m);
  for (int i = 0; i < n; ++i) b.ef.x_labels.push_back(vlabel(i));
  for (int j = 0; j < m; ++j) b.ef.x_labels.push_back(elabel(j));
  std::vector<int> degree(n, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (int e = 0; e < m; ++e) b.ef.ineqs.push_back(make_row({{n + e, Rat(-1)}}, Rat(0)));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges[e];
    b.ef.ineqs.push_back(make_row({{n + e, Rat(1)}, {u, Rat(-1)}}, Rat(0)));
    b.ef.ineqs.push_back(make_row({{n + e, Rat(1)}, {v, Rat(-1)}}, Rat(0)));
  }
  for (int i = 0; i < n; ++i) b.ef.ineqs.push_back(make_row({{i, Rat(1)}}, Rat(1)));
  int isolated = 0;
  for (int i = 0; i < n; ++i)
    if (degree[i] == 0) {
      b.ef.ineqs.push_back(make_row({{i, Rat(-1)}}, Rat(0)));
      ++isolated;
    }
  validate_ef(b.ef);
  b.provenance = "subp(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
  b.stages.push_back(
      stage_of("subp", b.ef, isolated ? "3m+n+" + std::to_string(isolated) : "3m+n"));
  b.lift = [](const RatVec&) { return RatVec{}; };
  return b;
}

EfBundle martin_stp(const Multigraph& g, const std::vector<std::string>& edge_labels) {
  if (!is_connected(g)) throw std::invalid_argument("martin_stp: graph must be connected");
  int n = g.n, m = g.m();
  EfBundle b;
  b.ef.x_labels = edge_labels.empty() ? default_elabels(m) : edge_labels;
  if (static_cast<int>(b.ef.x_labels.size()) != m)
    throw std::invalid_argument("martin_stp: one label per edge required");
  b.ef.aux_count = 2 * n * m;
  auto zcol = [m](int k, Dart d) { return m + k * 2 * m + d; };
  for (int k = 0; k < n; ++k)
    for (Dart d = 0; d < 2 * m; ++d)
      b.ef.ineqs.push_back(make_row({{zcol(k, d), Rat(-1)}}, Rat(0)));
  {
    std::vector<std::pair<int, Rat>> terms;
    for (int e = 0; e < m; ++e) terms.push_back({e, Rat(1)});
    b.ef.eqs.push_back(make_row(std::move(terms), Rat(n - 1)));
  }
  for (int k = 0; k < n; ++k)
    for (int e = 0; e < m; ++e)
      b.ef.eqs.push_back(make_row(
          {{zcol(k, make_dart(e, 0)), Rat(1)}, {zcol(k, make_dart(e, 1)), Rat(1)}, {e, Rat(-1)}},
          Rat(0)));
  auto at = darts_by_vertex(g);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, Rat>> terms;
      for (Dart d : at[i]) terms.push_back({zcol(k, d), Rat(1)});
      b.ef.eqs.push_back(make_row(std::move(terms), Rat(i == k ? 0 : 1)));
    }
  validate_ef(b.ef);
  b.provenance = "martin(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
  b.stages.push_back(stage_of("martin", b.ef, "2nm"));
  Multigraph graph = g;
  b.lift = [graph, n, m, zcol](const RatVec& x) {
    check(static_cast<int>(x.size()) == m, "martin lift: wrong x length");
    auto tree = edge_set_of(x);
    check(static_cast<int>(tree.size()) == n - 1, "martin lift: not n-1 edges");
    RatVec aux(2 * n * m, Rat(0));
    for (int k = 0; k < n; ++k) {
      auto parent = orient_toward(graph, tree, k);
      for (int i = 0; i < n; ++i)
        if (i != k) aux[zcol(k, parent[i]) - m] = 1;
    }
    return aux;
  };
  return b;
}

EfBundle williams_stp(const EmbeddedGraph& h, const std::vector<std::string>& edge_labels) {
  const Multigraph& g = h.graph;
  if (!is_connected(g)) throw std::invalid_argument("williams_stp: graph must be connected");
  for (auto [u, v] : g.edges)
    if (u == v) throw std::invalid_argument("williams_stp: loops are not supported");
  int n = g.n, m = g.m();
  EfBundle b;
  b.ef.x_labels = edge_labels.empty() ? default_elabels(m) : edge_labels;
  if (static_cast<int>(b.ef.x_labels.size()) != m)
    throw std::invalid_argument("williams_stp: one label per edge required");
  if (m == 0) {
    // single vertex: the spanning tree polytope is the zero-dimensional point
    validate_ef(b.ef);
    b.provenance = "williams(n=1,m=0)";
    b.stages.push_back(stage_of("williams", b.ef, "4m"));
    b.lift = [](const RatVec&) { return RatVec{}; };
    return b;
  }
  validate_rotation(g, h.rotation);
  if (euler_genus(h) != 0) throw std::invalid_argument("williams_stp: embedding is not planar");

  auto faces = trace_faces(h);
  int nf = static_cast<int>(faces.size());
  std::vector<int> face_of(2 * m, -1);
  for (int f = 0; f < nf; ++f)
    for (Dart d : faces[f]) face_of[d] = f;
  // dual root: the first traced face with a corner at the primal root 0
  int f0 = -1;
  for (int f = 0; f < nf && f0 < 0; ++f)
    for (Dart d : faces[f])
      if (dart_at(g, d) == 0) {
        f0 = f;
        break;
      }
  check(f0 >= 0, "williams_stp: no face incident to the root");

  b.ef.aux_count = 4 * m;
  // per edge e: columns 4e+end are its primal arcs (leaving the dart's
  // vertex), 4e+2+end its dual arcs (leaving the dart's face)
  auto acol = [m](Dart d) { return m + 4 * dart_edge(d) + dart_end(d); };
  auto bcol = [m](Dart d) { return m + 4 * dart_edge(d) + 2 + dart_end(d); };
  for (int j = 0; j < 4 * m; ++j) b.ef.ineqs.push_back(make_row({{m + j, Rat(-1)}}, Rat(0)));
  for (int e = 0; e < m; ++e) {
    Dart d0 = make_dart(e, 0), d1 = make_dart(e, 1);
    b.ef.eqs.push_back(make_row(
        {{acol(d0), Rat(1)}, {acol(d1), Rat(1)}, {bcol(d0), Rat(1)}, {bcol(d1), Rat(1)}}, Rat(1)));
    b.ef.eqs.push_back(make_row({{e, Rat(1)}, {acol(d0), Rat(-1)}, {acol(d1), Rat(-1)}}, Rat(0)));
  }
  auto at = darts_by_vertex(g);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, Rat>> terms;
    for (Dart d : at[i]) terms.push_back({acol(d), Rat(1)});
    b.ef.eqs.push_back(make_row(std::move(terms), Rat(i == 0 ? 0 : 1)));
  }
  for (int f = 0; f < nf; ++f) {
    std::vector<std::pair<int, Rat>> terms;
    for (Dart d : faces[f]) terms.push_back({bcol(d), Rat(1)});
    b.ef.eqs.push_back(make_row(std::move(terms), Rat(f == f0 ? 0 : 1)));
  }
  validate_ef(b.ef);
  b.provenance = "williams(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                 ",r=0,f0=" + std::to_string(f0) + ")";
  b.stages.push_back(stage_of("williams", b.ef, "4m"));

  Multigraph graph = g;
  b.lift = [graph, n, m, nf, f0, face_of, acol, bcol](const RatVec& x) {
    check(static_cast<int>(x.size()) == m, "williams lift: wrong x length");
    auto tree = edge_set_of(x);
    check(static_cast<int>(tree.size()) == n - 1, "williams lift: not n-1 edges");
    RatVec aux(4 * m, Rat(0));
    auto parent = orient_toward(graph, tree, 0);
    for (int i = 1; i < n; ++i) aux[acol(parent[i]) - m] = 1;
    // co-tree duals form a spanning tree of the dual; orient it toward f0
    std::vector<bool> in_tree(m, false);
    for (int e : tree) in_tree[e] = true;
    std::vector<std::vector<std::pair<int, int>>> dadj(nf);  // face -> (other face, edge)
    for (int e = 0; e < m; ++e) {
      if (in_tree[e]) continue;
      int fa = face_of[make_dart(e, 0)], fb = face_of[make_dart(e, 1)];
      dadj[fa].push_back({fb, e});
      dadj[fb].push_back({fa, e});
    }
    std::vector<bool> seen(nf, false);
    std::queue<int> q;
    q.push(f0);
    seen[f0] = true;
    int reached = 1;
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (auto [fo, e] : dadj[f]) {
        if (seen[fo]) continue;
        seen[fo] = true;
        ++reached;
        Dart d = make_dart(e, face_of[make_dart(e, 0)] == fo ? 0 : 1);
        check(face_of[d] == fo, "williams lift: dual arc orientation");
        aux[bcol(d) - m] = 1;
        q.push(fo);
      }
    }
    check(reached == nf, "williams lift: co-tree duals do not span the faces");
    return aux;
  };
  return b;
}

EfBundle forest_ef(const Multigraph& h, const std::vector<std::string>& edge_labels) {
  int m = h.m();
  for (auto [u, v] : h.edges)
    if (u == v) throw std::invalid_argument("forest_ef: loops are not supported");
  std::vector<std::string> labels = edge_labels.empty() ? default_elabels(m) : edge_labels;
  if (static_cast<int>(labels.size()) != m)
    throw std::invalid_argument("forest_ef: one label per edge required");

  EfBundle b;
  std::vector<EfBundle> parts;
  std::vector<int> pos_to_hedge;  // product x position -> edge index in h
  for (const auto& comp : components(h)) {
    if (comp.size() < 2) continue;  // no edges, nothing to contribute
    Subgraph sub = induced_subgraph(h, comp);
    std::vector<std::string> lab;
    for (int j = 0; j < sub.graph.m(); ++j) lab.push_back(labels[sub.edge_of[j]]);
    auto pr = is_planar(sub.graph);
    EfBundle piece;
    if (pr.planar) {
      piece = williams_stp({sub.graph, pr.rotation}, lab);
    } else {
      piece = martin_stp(sub.graph, lab);
      b.warnings.push_back("forest_ef: component at vertex " + std::to_string(comp[0]) +
                           " is not planar; quadratic stp formulation used");
    }
    for (int j = 0; j < sub.graph.m(); ++j) pos_to_hedge.push_back(sub.edge_of[j]);
    parts.push_back(std::move(piece));
  }

  ExtForm base;
  std::string prov;
  std::vector<int> part_nx, part_aux;
  for (size_t i = 0; i < parts.size(); ++i) {
    part_nx.push_back(parts[i].ef.nx());
    part_aux.push_back(parts[i].ef.aux_count);
    base = i == 0 ? parts[i].ef : product(base, parts[i].ef);
    prov = i == 0 ? parts[i].provenance : prov + "," + parts[i].provenance;
    for (const auto& s : parts[i].stages) b.stages.push_back(s);
  }
  if (parts.size() > 1) prov = "product(" + prov + ")";
  if (parts.empty()) prov = "point0";

  b.ef = monotonize(base);
  validate_ef(b.ef);
  b.provenance = "monotonize(" + prov + ")";
  b.stages.push_back(stage_of("forest", b.ef, "sum(4m_i)+2m"));

  std::vector<std::function<RatVec(const RatVec&)>> lifts;
  for (auto& p : parts) lifts.push_back(adopt_lift(p.lift, p.lift_stats, b.lift_stats));
  int nh = h.n;
  auto hedges = h.edges;
  std::vector<int> hedge_to_pos(m, -1);
  for (size_t p = 0; p < pos_to_hedge.size(); ++p) hedge_to_pos[pos_to_hedge[p]] = p;
  b.lift = [nh, m, hedges, pos_to_hedge, hedge_to_pos, part_nx, part_aux,
            lifts](const RatVec& x) {
    check(static_cast<int>(x.size()) == m, "forest lift: wrong x length");
    // grow the forest to a spanning forest: that is the z block
    Dsu dsu(nh);
    for (int pos = 0; pos < m; ++pos)
      if (x[pos] == 1) {
        auto [u, v] = hedges[pos_to_hedge[pos]];
        check(dsu.join(u, v), "forest lift: x is not a forest");
      } else {
        check(x[pos] == 0, "forest lift: x is not a 0/1 vector");
      }
    RatVec z(m, Rat(0));
    for (int pos = 0; pos < m; ++pos)
      if (x[pos] == 1) z[pos] = 1;
    for (int e = 0; e < m; ++e) {
      auto [u, v] = hedges[e];
      if (dsu.join(u, v)) z[hedge_to_pos[e]] = 1;
    }
    RatVec aux = z;
    int pos = 0;
    for (size_t i = 0; i < lifts.size(); ++i) {
      RatVec slice(z.begin() + pos, z.begin() + pos + part_nx[i]);
      RatVec pa = lifts[i](slice);
      check(static_cast<int>(pa.size()) == part_aux[i], "forest lift: part aux size");
      aux.insert(aux.end(), pa.begin(), pa.end());
      pos += part_nx[i];
    }
    return aux;
  };
  return b;
}

EfBundle nesubp_planar_ef(const Multigraph& h) {
  if (h.n < 1) throw std::invalid_argument("nesubp_planar_ef: empty graph");
  int n = h.n, m = h.m();
  EfBundle sub = subp_ef(h);
  EfBundle forest = forest_ef(h);

  // pair each forest edge variable with the matching f coordinate
  std::map<std::string, int> outer_col;
  for (int c = 0; c < sub.ef.nx(); ++c) outer_col[sub.ef.x_labels[c]] = c;
  std::vector<SparseRow> directions;
  std::vector<int> forest_obj_col;  // forest x position -> subp column
  for (int j = 0; j < forest.ef.nx(); ++j) {
    int c = outer_col.at(forest.ef.x_labels[j]);
    directions.push_back(make_row({{c, Rat(1)}}, Rat(0)));
    forest_obj_col.push_back(c);
  }
  std::vector<std::pair<int, Rat>> aterms;
  for (int i = 0; i < n; ++i) aterms.push_back({i, Rat(1)});
  SparseRow budget = make_row(std::move(aterms), Rat(-1));

  ExtForm cut = robust_counterpart(forest.ef, sub.ef.x_labels, directions, budget);

  EfBundle b;
  b.ef = intersect(sub.ef, cut);
  b.provenance = "intersect(" + sub.provenance + ",forestcut(" + forest.provenance + "))";
  b.warnings = forest.warnings;
  b.stages = sub.stages;
  for (const auto& s : forest.stages) b.stages.push_back(s);
  b.stages.push_back(stage_of("nesubp_planar", b.ef, "subp+forest+1"));

  // lift: optimal duals of max{ f . q : q in forest polytope } over one
  // warm-started tableau
  struct State {
    ExtForm forest;
    std::unique_ptr<SimplexTableau> tab;
  };
  auto state = std::make_shared<State>();
  state->forest = forest.ef;
  auto stats = b.lift_stats;
  int fdim = forest.ef.dim();
  b.lift = [state, stats, forest_obj_col, fdim, n, m](const RatVec& x) {
    check(static_cast<int>(x.size()) == n + m, "nesubp lift: wrong x length");
    if (fdim == 0) return RatVec{};
    RatVec obj(fdim, Rat(0));
    for (size_t j = 0; j < forest_obj_col.size(); ++j) obj[j] = x[forest_obj_col[j]];
    LPSolution sol;
    if (!state->tab) {
      LPProblem p = ef_lp(state->forest);
      p.sense = Sense::maximize;
      p.objective = obj;
      state->tab = std::make_unique<SimplexTableau>(std::move(p));
      sol = state->tab->solve();
    } else {
      sol = state->tab->resolve(Sense::maximize, obj);
    }
    ++stats->solves;
    stats->pivots += sol.pivots;
    check(sol.status == LPStatus::optimal, "nesubp lift: forest LP not optimal");
    RatVec aux = sol.ineq_duals;
    aux.insert(aux.end(), sol.eq_duals.begin(), sol.eq_duals.end());
    return aux;
  };
  return b;
}

EfBundle nesubp_deletion_ef(const Multigraph& g, const std::vector<int>& x,
                            const std::optional<EfBundle>& inner) {
  if (!is_connected(g)) throw std::invalid_argument("nesubp_deletion_ef: G must be connected");
  int n = g.n, m = g.m();
  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int v : xs)
    if (v < 0 || v >= n) throw std::invalid_argument("nesubp_deletion_ef: vertex out of range");
  bool have_inner = static_cast<int>(xs.size()) < n;
  if (have_inner && !inner)
    throw std::invalid_argument("nesubp_deletion_ef: inner formulation required when X != V");

  std::vector<std::string> target;
  for (int i = 0; i < n; ++i) target.push_back(vlabel(i));
  for (int j = 0; j < m; ++j) target.push_back(elabel(j));

  EfBundle b;
  std::vector<ExtForm> parts;
  std::string prov;
  std::vector<int> inner_restrict;  // inner x position -> target column
  if (have_inner) {
    std::map<std::string, int> tcol;
    for (size_t c = 0; c < target.size(); ++c) tcol[target[c]] = static_cast<int>(c);
    for (const auto& l : inner->ef.x_labels) inner_restrict.push_back(tcol.at(l));
    parts.push_back(embed_zero(inner->ef, target));
    prov = "embed(" + inner->provenance + ")";
    b.stages = inner->stages;
    b.warnings = inner->warnings;
  }
  EfBundle sub = subp_ef(g);
  for (int v : xs) {
    parts.push_back(face_restrict(sub.ef, make_row({{v, Rat(1)}}, Rat(1))));
    prov += (prov.empty() ? "" : ",") + ("face(" + sub.provenance + "," + vlabel(v) + "=1)");
  }
  b.ef = balas_union(parts);
  b.provenance = "balas(" + prov + ")";
  b.stages.push_back(stage_of("nesubp_deletion", b.ef, "inner+|X|(3m+n)+parts"));

  int k = static_cast<int>(parts.size());
  std::vector<int> block_dim;
  for (const auto& p : parts) block_dim.push_back(p.dim());
  int blocks_total = 0;
  for (int d : block_dim) blocks_total += d;
  int nx = n + m;
  auto inner_lift = have_inner ? adopt_lift(inner->lift, inner->lift_stats, b.lift_stats)
                               : std::function<RatVec(const RatVec&)>();
  if (!have_inner || inner_lift) {
    auto edges = g.edges;
    b.lift = [xs, have_inner, inner_lift, inner_restrict, block_dim, blocks_total, k, nx, n,
              edges](const RatVec& x) {
      check(static_cast<int>(x.size()) == nx, "deletion lift: wrong x length");
      int chosen = -1;
      for (size_t i = 0; i < xs.size(); ++i)
        if (x[xs[i]] == 1) {
          chosen = (have_inner ? 1 : 0) + static_cast<int>(i);
          break;
        }
      if (chosen < 0) {
        check(have_inner, "deletion lift: no piece admits this vertex");
        for (int v : xs) check(x[v] == 0, "deletion lift: fractional coordinate on X");
        for (size_t e = 0; e < edges.size(); ++e) {
          bool touches_x = std::binary_search(xs.begin(), xs.end(), edges[e].first) ||
                           std::binary_search(xs.begin(), xs.end(), edges[e].second);
          if (touches_x) check(x[n + e] == 0, "deletion lift: deleted edge has weight");
        }
        chosen = 0;
      }
      RatVec aux(blocks_total + k, Rat(0));
      int off = 0;
      for (int i = 0; i < chosen; ++i) off += block_dim[i];
      for (int t = 0; t < nx; ++t) aux[off + t] = x[t];
      if (have_inner && chosen == 0) {
        RatVec rest;
        rest.reserve(inner_restrict.size());
        for (int c : inner_restrict) rest.push_back(x[c]);
        RatVec ia = inner_lift(rest);
        check(static_cast<int>(ia.size()) == block_dim[0] - nx, "deletion lift: inner aux size");
        for (size_t t = 0; t < ia.size(); ++t) aux[off + nx + t] = ia[t];
      }
      aux[blocks_total + chosen] = 1;
      return aux;
    };
  }
  return b;
}

EfBundle stp_from_nesubp(const Multigraph& g, const EfBundle& inner) {
  if (!is_connected(g)) throw std::invalid_argument("stp_from_nesubp: G must be connected");
  int n = g.n, m = g.m();
  std::vector<std::string> outer = default_elabels(m);
  std::map<std::string, int> ocol;
  for (int j = 0; j < m; ++j) ocol[outer[j]] = j;

  std::vector<SparseRow> directions;
  std::vector<std::pair<bool, int>> dir_kind;  // (is_edge, outer col) per inner x column
  for (const auto& l : inner.ef.x_labels) {
    auto it = ocol.find(l);
    if (it != ocol.end()) {
      directions.push_back(make_row({{it->second, Rat(1)}}, Rat(0)));
      dir_kind.push_back({true, it->second});
    } else if (!l.empty() && l[0] == 'v') {
      directions.push_back(make_row({}, Rat(-1)));
      dir_kind.push_back({false, -1});
    } else {
      throw std::invalid_argument("stp_from_nesubp: unexpected inner label " + l);
    }
  }
  SparseRow budget = make_row({}, Rat(-1));

  EfBundle b;
  b.ef = robust_counterpart(inner.ef, outer, directions, budget);
  for (int j = 0; j < m; ++j) b.ef.ineqs.push_back(make_row({{j, Rat(-1)}}, Rat(0)));
  {
    std::vector<std::pair<int, Rat>> terms;
    for (int j = 0; j < m; ++j) terms.push_back({j, Rat(1)});
    b.ef = face_restrict(std::move(b.ef), make_row(std::move(terms), Rat(n - 1)));
  }
  validate_ef(b.ef);
  b.provenance = "stp_from_nesubp(" + inner.provenance + ")";
  b.stages = inner.stages;
  b.warnings = inner.warnings;
  b.stages.push_back(stage_of("stp_from_nesubp", b.ef, "inner+1+m"));

  struct State {
    ExtForm inner;
    std::unique_ptr<SimplexTableau> tab;
  };
  auto state = std::make_shared<State>();
  state->inner = inner.ef;
  auto stats = b.lift_stats;
  int idim = inner.ef.dim();
  int inx = inner.ef.nx();
  b.lift = [state, stats, dir_kind, idim, inx, m](const RatVec& x) {
    check(static_cast<int>(x.size()) == m, "stp lift: wrong x length");
    RatVec obj(idim, Rat(0));
    for (int c = 0; c < inx; ++c) obj[c] = dir_kind[c].first ? x[dir_kind[c].second] : Rat(-1);
    LPSolution sol;
    if (!state->tab) {
      LPProblem p = ef_lp(state->inner);
      p.sense = Sense::maximize;
      p.objective = obj;
      state->tab = std::make_unique<SimplexTableau>(std::move(p));
      sol = state->tab->solve();
    } else {
      sol = state->tab->resolve(Sense::maximize, obj);
    }
    ++stats->solves;
    stats->pivots += sol.pivots;
    check(sol.status == LPStatus::optimal, "stp lift: inner LP not optimal");
    RatVec aux = sol.ineq_duals;
    aux.insert(aux.end(), sol.eq_duals.begin(), sol.eq_duals.end());
    return aux;
  };
  return b;
}

namespace {

PipelineResult run_deletion_pipeline(const Multigraph& g, std::vector<int> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (int v : x)
    if (v < 0 || v >= g.n) throw std::invalid_argument("pipeline: apex vertex out of range");
  std::vector<int> keep = keep_after_deletion(g.n, x);
  std::optional<EfBundle> inner;
  if (!keep.empty()) {
    Subgraph h = induced_subgraph(g, keep);
    auto pr = is_planar(h.graph);
    if (!pr.planar)
      throw std::invalid_argument("pipeline: G - X is not planar (" + pr.witness + ")");
    EfBundle local = nesubp_planar_ef(h.graph);
    std::vector<std::string> global;
    for (int i = 0; i < h.graph.n; ++i) global.push_back(vlabel(h.vertex_of[i]));
    for (int j = 0; j < h.graph.m(); ++j) global.push_back(elabel(h.edge_of[j]));
    local.ef.x_labels = std::move(global);
    validate_ef(local.ef);
    inner = std::move(local);
  }
  EfBundle del = nesubp_deletion_ef(g, x, inner);
  EfBundle stp = stp_from_nesubp(g, del);
  PipelineResult r{std::move(stp), {}};
  r.report.stages = r.bundle.stages;
  r.report.warnings = r.bundle.warnings;
  r.report.deleted_vertices = x;
  r.report.apex_k = static_cast<int>(x.size());
  return r;
}

}  // namespace

PipelineResult bounded_genus_stp(const Multigraph& g, int genus, std::optional<std::vector<int>> x,
                                 PlanarizerStrategy strategy, std::uint64_t seed) {
  if (!is_connected(g)) throw std::invalid_argument("bounded_genus_stp: G must be connected");
  std::vector<int> xs = x ? *x : planarizing_set(g, strategy, genus, seed);
  PipelineResult r = run_deletion_pipeline(g, std::move(xs));
  r.report.genus_hint = genus;
  return r;
}

PipelineResult kapex_stp(const Multigraph& g, const std::vector<int>& x) {
  if (!is_connected(g)) throw std::invalid_argument("kapex_stp: G must be connected");
  PipelineResult r = run_deletion_pipeline(g, x);
  long n = g.n, k = r.report.apex_k;
  long bound = k * (n - 1) + std::max<long>(0, 3 * (n - k) - 6);
  r.report.edge_bound_ok = g.m() <= bound;
  if (!r.report.edge_bound_ok)
    r.report.warnings.push_back("kapex_stp: |E| = " + std::to_string(g.m()) +
                                " exceeds the k-apex bound " + std::to_string(bound));
  return r;
}

}  // namespace stpef
