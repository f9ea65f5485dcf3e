#include "stpef/surface.hpp"

#include <stdexcept>

namespace stpef {

namespace {

int dart_vertex(const Multigraph& g, Dart d) {
  auto [u, v] = g.edges[dart_edge(d)];
  return dart_end(d) == 0 ? u : v;
}

}  // namespace

void validate_rotation(const Multigraph& g, const RotationSystem& r) {
  if (static_cast<int>(r.rot.size()) != g.n)
    throw std::invalid_argument("rotation: wrong vertex count");
  int total_darts = 2 * g.m();
  std::vector<int> seen(total_darts, 0);
  for (int v = 0; v < g.n; ++v) {
    for (Dart d : r.rot[v]) {
      if (d < 0 || d >= total_darts) throw std::invalid_argument("rotation: dart out of range");
      if (dart_vertex(g, d) != v)
        throw std::invalid_argument("rotation: dart listed at wrong vertex");
      if (seen[d]++) throw std::invalid_argument("rotation: dart listed twice");
    }
  }
  for (int d = 0; d < total_darts; ++d)
    if (!seen[d]) throw std::invalid_argument("rotation: dart missing");
}

std::vector<std::vector<Dart>> trace_faces(const EmbeddedGraph& e) {
  const Multigraph& g = e.graph;
  validate_rotation(g, e.rotation);
  int total_darts = 2 * g.m();
  // successor of d in the rotation at d's vertex
  std::vector<Dart> sigma(total_darts, -1);
  for (int v = 0; v < g.n; ++v) {
    const auto& cyc = e.rotation.rot[v];
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) sigma[cyc[i]] = cyc[(i + 1) % k];
  }
  std::vector<bool> used(total_darts, false);
  std::vector<std::vector<Dart>> faces;
  for (Dart start = 0; start < total_darts; ++start) {
    if (used[start]) continue;
    std::vector<Dart> walk;
    Dart d = start;
    do {
      check(!used[d], "face tracing revisited a dart");
      used[d] = true;
      walk.push_back(d);
      d = sigma[dart_mate(d)];
    } while (d != start);
    faces.push_back(std::move(walk));
  }
  return faces;
}

int euler_genus(const EmbeddedGraph& e) {
  auto faces = trace_faces(e);
  auto comps = components(e.graph);
  // component id per vertex
  std::vector<int> comp_of(e.graph.n, -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> mc(comps.size(), 0), fc(comps.size(), 0);
  for (auto [u, v] : e.graph.edges) {
    (void)v;
    ++mc[comp_of[u]];
  }
  for (const auto& walk : faces) ++fc[comp_of[dart_vertex(e.graph, walk[0])]];
  int genus = 0;
  for (size_t c = 0; c < comps.size(); ++c) {
    int n_c = static_cast<int>(comps[c].size());
    int f_c = mc[c] == 0 ? 1 : fc[c];  // an edgeless component bounds one face
    int chi = n_c - mc[c] + f_c;
    check((2 - chi) % 2 == 0 && chi <= 2, "euler characteristic out of range");
    genus += (2 - chi) / 2;
  }
  return genus;
}

DualResult dual_graph(const EmbeddedGraph& e) {
  auto faces = trace_faces(e);
  int total_darts = 2 * e.graph.m();
  DualResult res;
  res.face_of_dart.assign(total_darts, -1);
  for (size_t f = 0; f < faces.size(); ++f)
    for (Dart d : faces[f]) res.face_of_dart[d] = static_cast<int>(f);

  Multigraph dual;
  dual.n = static_cast<int>(faces.size());
  dual.simple = false;
  dual.edges.resize(e.graph.m());
  for (int ed = 0; ed < e.graph.m(); ++ed)
    dual.edges[ed] = {res.face_of_dart[make_dart(ed, 0)], res.face_of_dart[make_dart(ed, 1)]};

  // Dual rotation at a face: dual darts in face-walk order. The walk passing
  // primal dart (e, end) contributes dual dart (e, end), which by
  // construction has that face as its endpoint.
  RotationSystem rot;
  rot.rot.resize(dual.n);
  for (size_t f = 0; f < faces.size(); ++f)
    for (Dart d : faces[f]) rot.rot[f].push_back(d);

  res.dual.graph = std::move(dual);
  res.dual.rotation = std::move(rot);
  validate_rotation(res.dual.graph, res.dual.rotation);
  return res;
}

}  // namespace stpef
