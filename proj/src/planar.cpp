#include "stpef/planar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stpef {

namespace {

int dart_tail(const Multigraph& g, Dart d) {
  auto [u, v] = g.edges[dart_edge(d)];
  return dart_end(d) == 0 ? u : v;
}
// Dart of edge e whose tail is v.
Dart dart_from(const Multigraph& g, int e, int v) {
  if (g.edges[e].first == v) return make_dart(e, 0);
  check(g.edges[e].second == v, "dart_from: vertex not on edge");
  return make_dart(e, 1);
}

// ----- biconnected blocks (loops excluded by the caller) -----

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // edge index lists
};

struct BlockDfs {
  const Multigraph& g;
  const std::vector<std::vector<std::pair<int, int>>>& adj;  // (edge, other)
  std::vector<int> disc, low;
  std::vector<int> edge_stack;
  std::vector<bool> edge_seen;
  BlockDecomposition out;
  int timer = 0;

  BlockDfs(const Multigraph& graph, const std::vector<std::vector<std::pair<int, int>>>& a)
      : g(graph), adj(a), disc(graph.n, -1), low(graph.n, 0), edge_seen(graph.m(), false) {}

  void run(int root) {
    dfs(root, -1);
    check(edge_stack.empty(), "block decomposition left edges on the stack");
  }

  void dfs(int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (auto [e, w] : adj[u]) {
      if (e == parent_edge || edge_seen[e]) continue;
      edge_seen[e] = true;
      edge_stack.push_back(e);
      if (disc[w] == -1) {
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<int> blk;
          int top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(top);
          } while (top != e);
          std::sort(blk.begin(), blk.end());
          out.blocks.push_back(std::move(blk));
        }
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }
};

// ----- DMP on a simple biconnected block -----

struct DmpResult {
  bool planar = false;
  std::string witness;
  // cyclic dart order at each block vertex, keyed by original vertex id
  std::map<int, std::vector<Dart>> rot;
};

struct Fragment {
  std::vector<int> edges;  // ascending
  std::vector<int> att;    // ascending attachment vertices (all in H)
};

class Dmp {
 public:
  Dmp(const Multigraph& g, const std::vector<int>& block_edges) : g_(g), edges_(block_edges) {
    for (int e : edges_) {
      auto [u, v] = g_.edges[e];
      verts_.insert(u);
      verts_.insert(v);
      adj_[u].push_back({e, v});
      adj_[v].push_back({e, u});
    }
  }

  DmpResult run() {
    DmpResult res;
    embed_initial_cycle();
    while (embedded_count_ < static_cast<int>(edges_.size())) {
      auto frags = fragments();
      check(!frags.empty(), "DMP: edges remain but no fragments found");
      // admissible face lists per fragment
      int best = -1;
      size_t best_count = 0;
      int best_face = -1;
      for (size_t i = 0; i < frags.size(); ++i) {
        int first_face = -1;
        size_t count = 0;
        for (size_t f = 0; f < faces_.size(); ++f) {
          if (admissible(frags[i], f)) {
            ++count;
            if (first_face == -1) first_face = static_cast<int>(f);
          }
        }
        if (count == 0) {
          res.planar = false;
          res.witness = stuck_witness(frags[i]);
          return res;
        }
        if (best == -1 || count < best_count) {
          best = static_cast<int>(i);
          best_count = count;
          best_face = first_face;
          if (best_count == 1) break;  // forced move; take it immediately
        }
      }
      embed_alpha_path(frags[best], best_face);
    }
    res.planar = true;
    res.rot = derive_rotation();
    return res;
  }

 private:
  const Multigraph& g_;
  std::vector<int> edges_;
  std::set<int> verts_;
  std::map<int, std::vector<std::pair<int, int>>> adj_;  // vertex -> (edge, other)
  std::map<int, bool> in_h_;
  std::set<int> embedded_;
  int embedded_count_ = 0;
  std::vector<std::vector<Dart>> faces_;

  void embed_initial_cycle() {
    // Grow a spanning tree of the block from its smallest vertex; the first
    // non-tree edge closes a cycle through the tree path between its ends.
    int root = *verts_.begin();
    std::map<int, std::pair<int, int>> parent;  // vertex -> (parent vertex, via edge)
    parent[root] = {-1, -1};
    std::vector<int> stack{root};
    int cu = -1, cv = -1, ce = -1;  // non-tree edge cu-cv with index ce
    while (!stack.empty() && ce == -1) {
      int u = stack.back();
      stack.pop_back();
      for (auto [e, w] : adj_[u]) {
        if (e == parent[u].second) continue;
        if (parent.count(w)) {
          cu = u;
          cv = w;
          ce = e;
          break;
        }
        parent[w] = {u, e};
        stack.push_back(w);
      }
    }
    check(ce != -1, "DMP: no cycle in biconnected block");

    // ancestor chain of cu, then walk cv upward until it meets that chain
    std::vector<int> au{cu};
    std::vector<int> ae;
    for (int y = cu; parent[y].first != -1; y = parent[y].first) {
      ae.push_back(parent[y].second);
      au.push_back(parent[y].first);
    }
    std::map<int, int> pos;
    for (size_t i = 0; i < au.size(); ++i) pos[au[i]] = static_cast<int>(i);
    std::vector<int> aw{cv};
    std::vector<int> we;
    int x = cv;
    while (!pos.count(x)) {
      auto [p, e] = parent[x];
      check(p != -1, "DMP: ancestor walk fell off the root");
      we.push_back(e);
      x = p;
      aw.push_back(x);
    }
    int pu = pos[x];  // meeting point's index in cu's chain

    // cycle: cu -> ... -> meet -> ... -> cv, closed by ce back to cu
    std::vector<int> vseq;
    std::vector<int> eseq;
    for (int i = 0; i <= pu; ++i) vseq.push_back(au[i]);
    for (int i = 0; i < pu; ++i) eseq.push_back(ae[i]);
    for (int i = static_cast<int>(aw.size()) - 2; i >= 0; --i) {
      eseq.push_back(we[i]);
      vseq.push_back(aw[i]);
    }
    eseq.push_back(ce);
    check(vseq.size() == eseq.size() && vseq.size() >= 3, "DMP: degenerate initial cycle");

    std::vector<Dart> forward;
    for (size_t i = 0; i < eseq.size(); ++i) forward.push_back(dart_from(g_, eseq[i], vseq[i]));
    std::vector<Dart> backward;
    for (auto it = forward.rbegin(); it != forward.rend(); ++it)
      backward.push_back(dart_mate(*it));
    faces_.push_back(forward);
    faces_.push_back(backward);
    for (Dart d : forward) {
      mark_embedded(dart_edge(d));
      in_h_[dart_tail(g_, d)] = true;
    }
  }

  void mark_embedded(int e) {
    if (embedded_.insert(e).second) ++embedded_count_;
  }

  bool in_h(int v) const {
    auto it = in_h_.find(v);
    return it != in_h_.end() && it->second;
  }

  std::vector<Fragment> fragments() {
    std::vector<Fragment> frags;
    // singleton fragments: unembedded edges with both ends embedded
    for (int e : edges_) {
      if (embedded_.count(e)) continue;
      auto [u, v] = g_.edges[e];
      if (in_h(u) && in_h(v)) frags.push_back({{e}, {std::min(u, v), std::max(u, v)}});
    }
    // components of non-H vertices
    std::set<int> visited;
    for (int s : verts_) {
      if (in_h(s) || visited.count(s)) continue;
      std::vector<int> comp{s};
      visited.insert(s);
      for (size_t qi = 0; qi < comp.size(); ++qi) {
        int u = comp[qi];
        for (auto [e, w] : adj_[u]) {
          (void)e;
          if (!in_h(w) && !visited.count(w)) {
            visited.insert(w);
            comp.push_back(w);
          }
        }
      }
      Fragment fr;
      std::set<int> att;
      std::set<int> fe;
      for (int u : comp)
        for (auto [e, w] : adj_[u]) {
          if (embedded_.count(e)) continue;
          fe.insert(e);
          if (in_h(w)) att.insert(w);
        }
      fr.edges.assign(fe.begin(), fe.end());
      fr.att.assign(att.begin(), att.end());
      check(fr.att.size() >= 2, "DMP: fragment with fewer than two attachments");
      frags.push_back(std::move(fr));
    }
    std::sort(frags.begin(), frags.end(),
              [](const Fragment& a, const Fragment& b) { return a.edges[0] < b.edges[0]; });
    return frags;
  }

  bool admissible(const Fragment& fr, size_t face) const {
    std::set<int> fv;
    for (Dart d : faces_[face]) fv.insert(dart_tail(g_, d));
    for (int a : fr.att)
      if (!fv.count(a)) return false;
    return true;
  }

  std::string stuck_witness(const Fragment& fr) const {
    std::string w = "fragment with attachments {";
    for (size_t i = 0; i < fr.att.size(); ++i) {
      if (i) w += ",";
      w += std::to_string(fr.att[i]);
    }
    w += "} fits in no face of the partial embedding";
    return w;
  }

  // Path between two attachments whose interior avoids H, BFS by edge index.
  void alpha_path(const Fragment& fr, std::vector<int>& path_vertices,
                  std::vector<int>& path_edges) {
    int a = fr.att[0];
    std::set<int> frag_edges(fr.edges.begin(), fr.edges.end());
    std::map<int, std::pair<int, int>> pred;  // vertex -> (prev vertex, via edge)
    std::vector<int> queue{a};
    pred[a] = {-1, -1};
    int goal = -1;
    for (size_t qi = 0; qi < queue.size() && goal == -1; ++qi) {
      int u = queue[qi];
      if (u != a && in_h(u)) continue;  // never walk through an attachment
      for (auto [e, w] : adj_[u]) {
        if (!frag_edges.count(e)) continue;
        if (pred.count(w)) continue;
        pred[w] = {u, e};
        if (in_h(w)) {
          check(w != a, "DMP: alpha path closed on its start");
          goal = w;
          break;
        }
        queue.push_back(w);
      }
    }
    check(goal != -1, "DMP: no alpha path inside fragment");
    std::vector<int> rv{goal};
    std::vector<int> re;
    int x = goal;
    while (x != a) {
      auto [p, e] = pred[x];
      re.push_back(e);
      x = p;
      rv.push_back(x);
    }
    path_vertices.assign(rv.rbegin(), rv.rend());
    path_edges.assign(re.rbegin(), re.rend());
  }

  void embed_alpha_path(const Fragment& fr, int face) {
    std::vector<int> pv, pe;
    alpha_path(fr, pv, pe);
    int a = pv.front(), b = pv.back();
    std::vector<Dart> fwd, bwd;
    for (size_t i = 0; i < pe.size(); ++i) fwd.push_back(dart_from(g_, pe[i], pv[i]));
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) bwd.push_back(dart_mate(*it));

    const std::vector<Dart> walk = faces_[face];
    int ia = -1, ib = -1;
    for (size_t i = 0; i < walk.size(); ++i) {
      int t = dart_tail(g_, walk[i]);
      if (t == a && ia == -1) ia = static_cast<int>(i);
      if (t == b && ib == -1) ib = static_cast<int>(i);
    }
    check(ia != -1 && ib != -1, "DMP: face lost an attachment");
    int len = static_cast<int>(walk.size());
    // face1: a ->path-> b, then walk[ib..ia-1]; face2: b ->path-> a, then walk[ia..ib-1]
    std::vector<Dart> face1 = fwd;
    for (int i = ib; i != ia; i = (i + 1) % len) face1.push_back(walk[i]);
    std::vector<Dart> face2 = bwd;
    for (int i = ia; i != ib; i = (i + 1) % len) face2.push_back(walk[i]);
    faces_[face] = std::move(face1);
    faces_.push_back(std::move(face2));

    for (size_t i = 0; i < pe.size(); ++i) mark_embedded(pe[i]);
    for (int v : pv) in_h_[v] = true;
  }

  std::map<int, std::vector<Dart>> derive_rotation() {
    // face permutation phi, then sigma(d) = phi(mate(d))
    std::map<Dart, Dart> phi;
    for (const auto& walk : faces_) {
      int len = static_cast<int>(walk.size());
      for (int i = 0; i < len; ++i) phi[walk[i]] = walk[(i + 1) % len];
    }
    std::map<int, std::vector<Dart>> rot;
    for (int v : verts_) {
      std::set<Dart> at_v;
      for (auto [e, w] : adj_[v]) {
        (void)w;
        at_v.insert(dart_from(g_, e, v));
      }
      Dart start = *at_v.begin();
      std::vector<Dart> cyc;
      Dart d = start;
      do {
        cyc.push_back(d);
        check(at_v.count(d) == 1, "DMP: rotation orbit left its vertex");
        auto it = phi.find(dart_mate(d));
        check(it != phi.end(), "DMP: dart missing from face permutation");
        d = it->second;
      } while (d != start && cyc.size() <= at_v.size());
      check(cyc.size() == at_v.size(), "DMP: rotation at vertex is not a single cycle");
      rot[v] = std::move(cyc);
    }
    return rot;
  }
};

}  // namespace

PlanarityResult is_planar(const Multigraph& g) {
  PlanarityResult res;
  res.rotation.rot.assign(g.n, {});

  // split off loops; they never affect planarity
  std::vector<int> loops;
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  int support_m = 0;
  {
    std::set<std::pair<int, int>> support_pairs;
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges[e];
      if (u == v) {
        loops.push_back(e);
        continue;
      }
      adj[u].push_back({e, v});
      adj[v].push_back({e, u});
      auto key = std::minmax(u, v);
      if (support_pairs.insert({key.first, key.second}).second) ++support_m;
    }
  }

  // Euler prefilter on the simple support, per component.
  {
    auto comps = components(g);
    std::vector<int> comp_of(g.n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<std::set<std::pair<int, int>>> pairs(comps.size());
    for (auto [u, v] : g.edges)
      if (u != v) {
        auto key = std::minmax(u, v);
        pairs[comp_of[u]].insert({key.first, key.second});
      }
    for (size_t c = 0; c < comps.size(); ++c) {
      int nc = static_cast<int>(comps[c].size());
      int mc = static_cast<int>(pairs[c].size());
      if (nc >= 3 && mc > 3 * nc - 6) {
        res.planar = false;
        res.witness = "component has more than 3n-6 support edges";
        return res;
      }
    }
  }

  // biconnected blocks of the loopless graph
  BlockDfs bd(g, adj);
  for (int v = 0; v < g.n; ++v)
    if (bd.disc[v] == -1 && !adj[v].empty()) bd.run(v);

  for (const auto& blk : bd.out.blocks) {
    // support representative per unordered pair, duplicates reinserted after
    std::map<std::pair<int, int>, int> rep;
    std::vector<int> dups;
    for (int e : blk) {
      auto [u, v] = g.edges[e];
      auto key = std::minmax(u, v);
      auto it = rep.find({key.first, key.second});
      if (it == rep.end())
        rep[{key.first, key.second}] = e;
      else
        dups.push_back(e);
    }
    std::vector<int> support;
    for (auto& [pair, e] : rep) {
      (void)pair;
      support.push_back(e);
    }
    std::sort(support.begin(), support.end());

    std::map<int, std::vector<Dart>> rot;
    if (support.size() == 1) {
      int e = support[0];
      auto [u, v] = g.edges[e];
      rot[u] = {dart_from(g, e, u)};
      rot[v] = {dart_from(g, e, v)};
    } else {
      Dmp dmp(g, support);
      DmpResult r = dmp.run();
      if (!r.planar) {
        res.planar = false;
        res.witness = r.witness;
        return res;
      }
      rot = std::move(r.rot);
    }

    // Parallel copies: next to the representative on both sides so each
    // insertion closes a bigon. At u the copy follows the representative's
    // dart; at v its mate precedes the representative's mate.
    std::sort(dups.begin(), dups.end());
    for (int e : dups) {
      auto [u0, v0] = g.edges[e];
      auto key = std::minmax(u0, v0);
      int r0 = rep[{key.first, key.second}];
      int u = g.edges[r0].first, v = g.edges[r0].second;
      Dart du = dart_from(g, r0, u), dv = dart_from(g, r0, v);
      Dart nu = dart_from(g, e, u), nv = dart_from(g, e, v);
      auto& cu = rot[u];
      cu.insert(std::find(cu.begin(), cu.end(), du) + 1, nu);
      auto& cv = rot[v];
      cv.insert(std::find(cv.begin(), cv.end(), dv), nv);
    }

    for (auto& [v, cyc] : rot) {
      auto& dst = res.rotation.rot[v];
      dst.insert(dst.end(), cyc.begin(), cyc.end());
    }
  }

  // loops: the two darts adjacent, forming a monogon
  for (int e : loops) {
    int v = g.edges[e].first;
    res.rotation.rot[v].push_back(make_dart(e, 0));
    res.rotation.rot[v].push_back(make_dart(e, 1));
  }

  res.planar = true;
  EmbeddedGraph emb{g, res.rotation};
  check(euler_genus(emb) == 0, "planar embedding failed the Euler check");
  return res;
}

namespace {

std::vector<int> degrees_induced(const Multigraph& g, const std::vector<bool>& present) {
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    if (!present[u] || !present[v]) continue;
    if (u == v) {
      deg[u] += 2;
    } else {
      ++deg[u];
      ++deg[v];
    }
  }
  return deg;
}

// Vertices of the 2-core of the graph induced on `present`.
std::vector<bool> two_core(const Multigraph& g, std::vector<bool> present) {
  bool changed = true;
  while (changed) {
    changed = false;
    auto deg = degrees_induced(g, present);
    for (int v = 0; v < g.n; ++v)
      if (present[v] && deg[v] <= 1) {
        present[v] = false;
        changed = true;
      }
  }
  return present;
}

bool planar_minus(const Multigraph& g, const std::vector<bool>& deleted) {
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (!deleted[v]) keep.push_back(v);
  return is_planar(induced_subgraph(g, keep).graph).planar;
}

// Greedy repair: delete max-degree 2-core vertices until planar.
void repair(const Multigraph& g, std::vector<bool>& deleted) {
  while (!planar_minus(g, deleted)) {
    std::vector<bool> present(g.n);
    for (int v = 0; v < g.n; ++v) present[v] = !deleted[v];
    auto core = two_core(g, present);
    auto deg = degrees_induced(g, core);
    int pick = -1;
    for (int v = 0; v < g.n; ++v)
      if (core[v] && (pick == -1 || deg[v] > deg[pick])) pick = v;
    check(pick != -1, "repair: non-planar remainder has an empty 2-core");
    deleted[pick] = true;
  }
}

// Drop deletions that are not needed, highest index first, to a fixpoint.
void prune(const Multigraph& g, std::vector<bool>& deleted) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = g.n - 1; v >= 0; --v) {
      if (!deleted[v]) continue;
      deleted[v] = false;
      if (planar_minus(g, deleted)) {
        changed = true;
      } else {
        deleted[v] = true;
      }
    }
  }
}

int count_deleted(const std::vector<bool>& deleted) {
  int c = 0;
  for (bool b : deleted) c += b ? 1 : 0;
  return c;
}

}  // namespace

PlanarizerStrategy planarizer_from_name(const std::string& name) {
  if (name == "greedy-degree") return PlanarizerStrategy::greedy_degree;
  if (name == "bfs-layers") return PlanarizerStrategy::bfs_layers;
  throw std::invalid_argument("unknown planarizer '" + name + "'");
}

std::string planarizer_name(PlanarizerStrategy s) {
  return s == PlanarizerStrategy::greedy_degree ? "greedy-degree" : "bfs-layers";
}

std::vector<int> planarizing_set(const Multigraph& g, PlanarizerStrategy s, int genus_hint,
                                 std::uint64_t seed) {
  (void)seed;  // reserved; both strategies are index-deterministic
  std::vector<int> out;
  if (is_planar(g).planar) return out;

  if (s == PlanarizerStrategy::greedy_degree) {
    std::vector<bool> deleted(g.n, false);
    repair(g, deleted);
    for (int v = 0; v < g.n; ++v)
      if (deleted[v]) out.push_back(v);
    return out;
  }

  // bfs-layers
  int gg = std::max(genus_hint, 1);
  int w = 1;
  while (static_cast<long long>(w) * w * gg < g.n) ++w;

  // BFS layer per vertex (forest rooted at the smallest vertex of each
  // component).
  std::vector<int> layer(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges)
    if (u != v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  for (int s0 = 0; s0 < g.n; ++s0) {
    if (layer[s0] != -1) continue;
    layer[s0] = 0;
    std::vector<int> queue{s0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int x : adj[u])
        if (layer[x] == -1) {
          layer[x] = layer[u] + 1;
          queue.push_back(x);
        }
    }
  }

  std::vector<bool> best;
  int best_size = -1;
  for (int o = 0; o < w; ++o) {
    std::vector<bool> deleted(g.n, false);
    for (int v = 0; v < g.n; ++v)
      if (layer[v] % w == o) deleted[v] = true;
    repair(g, deleted);
    prune(g, deleted);
    int size = count_deleted(deleted);
    if (best_size == -1 || size < best_size) {
      best_size = size;
      best = deleted;
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (best[v]) out.push_back(v);
  return out;
}

}  // namespace stpef
