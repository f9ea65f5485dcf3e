#include "stpef/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stpef {

namespace {

struct Dsu {
  std::vector<int> parent, rank_;
  explicit Dsu(int n) : parent(n), rank_(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }
};

}  // namespace

Multigraph new_multigraph(int n, std::vector<std::pair<int, int>> edges, bool simple) {
  if (n < 0) throw std::invalid_argument("new_multigraph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("new_multigraph: edge endpoint out of range");
  }
  if (simple) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      if (u == v) throw std::invalid_argument("new_multigraph: loop in simple graph");
      auto key = std::minmax(u, v);
      if (!seen.insert({key.first, key.second}).second)
        throw std::invalid_argument("new_multigraph: parallel edge in simple graph");
    }
  }
  Multigraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.simple = simple;
  return g;
}

std::vector<std::vector<int>> components(const Multigraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : adj[v]) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;  // ordered by smallest member since starts scan ascending
}

bool is_connected(const Multigraph& g) {
  if (g.n == 0) return true;
  return components(g).size() == 1;
}

MstResult kruskal_mst(const Multigraph& g, const Weighting& w) {
  if (static_cast<int>(w.size()) != g.m())
    throw std::invalid_argument("kruskal_mst: weighting length mismatch");
  if (!is_connected(g)) throw std::invalid_argument("kruskal_mst: graph not connected");
  std::vector<int> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] < w[b]; });  // ties keep index order
  Dsu dsu(g.n);
  MstResult res;
  res.weight = 0;
  for (int e : order) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    if (dsu.unite(u, v)) {
      res.tree_edges.push_back(e);
      res.weight += w[e];
    }
  }
  std::sort(res.tree_edges.begin(), res.tree_edges.end());
  check(static_cast<int>(res.tree_edges.size()) == g.n - 1 || g.n == 0,
        "kruskal produced wrong edge count");
  return res;
}

namespace {

// Include/exclude search over edge indices; include branch first, so trees
// come out in lexicographic order of their ascending index lists.
void enum_trees_rec(const Multigraph& g, int idx, int chosen, Dsu dsu,
                    std::vector<int>& current, std::vector<std::vector<int>>& out) {
  int need = g.n - 1;
  if (chosen == need) {
    out.push_back(current);
    return;
  }
  if (idx == g.m()) return;
  if (chosen + (g.m() - idx) < need) return;
  // Can the remaining edges still connect everything?
  {
    Dsu probe = dsu;
    int comps = g.n - chosen;
    for (int e = idx; e < g.m() && comps > 1; ++e) {
      auto [u, v] = g.edges[e];
      if (u != v && probe.unite(u, v)) --comps;
    }
    if (comps > 1) return;
  }
  auto [u, v] = g.edges[idx];
  if (u != v && dsu.find(u) != dsu.find(v)) {
    Dsu with = dsu;
    with.unite(u, v);
    current.push_back(idx);
    enum_trees_rec(g, idx + 1, chosen + 1, std::move(with), current, out);
    current.pop_back();
  }
  enum_trees_rec(g, idx + 1, chosen, std::move(dsu), current, out);
}

}  // namespace

std::vector<std::vector<int>> enumerate_spanning_trees(const Multigraph& g) {
  if (g.m() > 30)
    throw std::invalid_argument("enumerate_spanning_trees: more than 30 edges");
  if (!is_connected(g))
    throw std::invalid_argument("enumerate_spanning_trees: graph not connected");
  std::vector<std::vector<int>> out;
  if (g.n <= 1) {
    out.push_back({});
    return out;
  }
  std::vector<int> current;
  enum_trees_rec(g, 0, 0, Dsu(g.n), current, out);
  return out;
}

Rat count_spanning_trees(const Multigraph& g) {
  if (g.n == 0) return 0;
  if (g.n == 1) return 1;
  if (!is_connected(g)) return 0;
  int k = g.n - 1;
  // Laplacian minor (drop last row/column), exact Gaussian elimination.
  std::vector<RatVec> a(k, RatVec(k, Rat(0)));
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    if (u < k) a[u][u] += 1;
    if (v < k) a[v][v] += 1;
    if (u < k && v < k) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  Rat det(1);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == -1) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv;
      for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Subgraph induced_subgraph(const Multigraph& g, const std::vector<int>& keep) {
  for (size_t i = 0; i + 1 < keep.size(); ++i)
    if (keep[i] >= keep[i + 1])
      throw std::invalid_argument("induced_subgraph: keep list not strictly ascending");
  for (int v : keep)
    if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: vertex out of range");
  std::vector<int> local(g.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  Subgraph s;
  s.vertex_of = keep;
  s.graph.n = static_cast<int>(keep.size());
  s.graph.simple = g.simple;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (local[u] != -1 && local[v] != -1) {
      s.graph.edges.push_back({local[u], local[v]});
      s.edge_of.push_back(e);
    }
  }
  return s;
}

std::vector<int> keep_after_deletion(int n, const std::vector<int>& drop) {
  std::vector<bool> gone(n, false);
  for (int v : drop) {
    if (v < 0 || v >= n) throw std::invalid_argument("keep_after_deletion: vertex out of range");
    gone[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) keep.push_back(v);
  return keep;
}

}  // namespace stpef
