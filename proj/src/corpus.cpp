#include "stpef/corpus.hpp"

#include <stdexcept>

namespace stpef {

EmbeddedGraph torus_grid(int k) {
  if (k < 3) throw std::invalid_argument("torus_grid: k must be >= 3");
  int n = k * k;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * n);
  auto id = [&](int i, int j) { return ((i % k + k) % k) * k + ((j % k + k) % k); };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      edges.push_back({id(i, j), id(i, j + 1)});  // right: index 2*(i*k+j)
      edges.push_back({id(i, j), id(i + 1, j)});  // down:  index 2*(i*k+j)+1
    }
  EmbeddedGraph e;
  e.graph = new_multigraph(n, std::move(edges), true);
  e.rotation.rot.resize(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int v = id(i, j);
      Dart right = make_dart(2 * v, 0);
      Dart down = make_dart(2 * v + 1, 0);
      Dart left = make_dart(2 * id(i, j - 1), 1);
      Dart up = make_dart(2 * id(i - 1, j) + 1, 1);
      e.rotation.rot[v] = {right, down, left, up};
    }
  return e;
}

Multigraph planar_grid(int k) {
  if (k < 2) throw std::invalid_argument("planar_grid: k must be >= 2");
  int n = k * k;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int v = i * k + j;
      if (j + 1 < k) edges.push_back({v, v + 1});
      if (i + 1 < k) edges.push_back({v, v + k});
    }
  return new_multigraph(n, std::move(edges), true);
}

Multigraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return new_multigraph(n, std::move(edges), true);
}

Multigraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return new_multigraph(n, std::move(edges), true);
}

Multigraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return new_multigraph(n, std::move(edges), true);
}

Multigraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return new_multigraph(a + b, std::move(edges), true);
}

Multigraph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
  return new_multigraph(10, std::move(edges), true);
}

Multigraph wheel(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel: rim must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < rim; ++v) edges.push_back({v, (v + 1) % rim});
  for (int v = 0; v < rim; ++v) edges.push_back({v, rim});
  return new_multigraph(rim + 1, std::move(edges), true);
}

Multigraph wheel_apex() {
  Multigraph w = wheel(6);
  std::vector<std::pair<int, int>> edges = w.edges;
  for (int v = 0; v < 7; ++v) edges.push_back({v, 7});
  return new_multigraph(8, std::move(edges), true);
}

std::vector<NamedGraph> corpus_all() {
  std::vector<NamedGraph> out;
  auto add = [&](const std::string& name, Multigraph g, int genus) {
    out.push_back({name, std::move(g), genus});
  };
  add("k2", path_graph(2), 0);
  add("p3", path_graph(3), 0);
  add("c3", cycle_graph(3), 0);
  add("c4", cycle_graph(4), 0);
  add("c5", cycle_graph(5), 0);
  add("c6", cycle_graph(6), 0);
  add("k4", complete_graph(4), 0);
  {
    // K4 minus the last edge (2,3)
    Multigraph g = complete_graph(4);
    g.edges.pop_back();
    add("k4_minus", std::move(g), 0);
  }
  {
    // triangle 0-1-2 with pendant 3 hanging off 0 (bridge)
    add("triangle_pendant",
        new_multigraph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}, true), 0);
  }
  {
    // two triangles sharing vertex 0 (cut vertex)
    add("bowtie",
        new_multigraph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}, true), 0);
  }
  {
    // two triangles joined by a bridge 0-3
    add("two_triangles_bridge",
        new_multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}}, true), 0);
  }
  add("k23", complete_bipartite(2, 3), 0);
  add("w5", wheel(5), 0);
  add("w6", wheel(6), 0);
  {
    // 3-cube
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b)
        if (!(v & (1 << b))) edges.push_back({v, v | (1 << b)});
    add("q3", new_multigraph(8, std::move(edges), true), 0);
  }
  add("grid3", planar_grid(3), 0);
  add("k33", complete_bipartite(3, 3), 1);
  add("k5", complete_graph(5), 1);
  add("k6", complete_graph(6), 1);
  add("k7", complete_graph(7), 1);
  add("k8", complete_graph(8), 2);
  add("petersen", petersen(), 1);
  add("wheel_apex", wheel_apex(), 1);
  add("c3xc3", torus_grid(3).graph, 1);
  add("c4xc4", torus_grid(4).graph, 1);
  add("c5xc5", torus_grid(5).graph, 1);
  return out;
}

NamedGraph corpus_get(const std::string& name) {
  for (auto& g : corpus_all())
    if (g.name == name) return g;
  throw std::invalid_argument("corpus_get: unknown graph '" + name + "'");
}

}  // namespace stpef
