#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "stpef/corpus.hpp"
#include "stpef/planar.hpp"
#include "stpef/surface.hpp"

using namespace stpef;

namespace {

EmbeddedGraph planar_embedding(const Multigraph& g) {
  auto pr = is_planar(g);
  REQUIRE(pr.planar);
  return {g, pr.rotation};
}

}  // namespace

TEST_CASE("dart arithmetic") {
  CHECK(dart_edge(7) == 3);
  CHECK(dart_end(7) == 1);
  CHECK(dart_mate(7) == 6);
  CHECK(make_dart(3, 1) == 7);
  CHECK(dart_mate(dart_mate(4)) == 4);
}

TEST_CASE("rotation validation rejects malformed systems") {
  auto g = new_multigraph(2, {{0, 1}}, true);
  RotationSystem ok{{{0}, {1}}};
  validate_rotation(g, ok);
  RotationSystem swapped{{{1}, {0}}};
  CHECK_THROWS_AS(validate_rotation(g, swapped), std::invalid_argument);
  RotationSystem missing{{{0}, {}}};
  CHECK_THROWS_AS(validate_rotation(g, missing), std::invalid_argument);
  RotationSystem dup{{{0, 0}, {1}}};
  CHECK_THROWS_AS(validate_rotation(g, dup), std::invalid_argument);
}

TEST_CASE("a single edge bounds one bigon face") {
  auto g = new_multigraph(2, {{0, 1}}, true);
  EmbeddedGraph e{g, {{{0}, {1}}}};
  auto faces = trace_faces(e);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0] == std::vector<Dart>{0, 1});
  CHECK(euler_genus(e) == 0);
}

TEST_CASE("torus grids have quadrilateral faces and genus one") {
  for (int k : {3, 4, 5}) {
    auto e = torus_grid(k);
    validate_rotation(e.graph, e.rotation);
    CHECK(e.graph.n == k * k);
    CHECK(e.graph.m() == 2 * k * k);
    auto faces = trace_faces(e);
    CHECK(faces.size() == static_cast<size_t>(k * k));
    for (const auto& f : faces) CHECK(f.size() == 4);
    CHECK(euler_genus(e) == 1);
  }
}

TEST_CASE("planar grid embeds with the right face count") {
  auto g = planar_grid(3);
  CHECK(g.n == 9);
  CHECK(g.m() == 12);
  auto e = planar_embedding(g);
  CHECK(trace_faces(e).size() == 5);
  CHECK(euler_genus(e) == 0);
}

TEST_CASE("edgeless components count one face each") {
  auto g = new_multigraph(3, {}, true);
  EmbeddedGraph e{g, {{{}, {}, {}}}};
  CHECK(euler_genus(e) == 0);
  CHECK(trace_faces(e).empty());
}

TEST_CASE("dual of a single edge is a loop vertex") {
  auto g = new_multigraph(2, {{0, 1}}, true);
  EmbeddedGraph e{g, {{{0}, {1}}}};
  auto d = dual_graph(e);
  CHECK(d.dual.graph.n == 1);
  REQUIRE(d.dual.graph.m() == 1);
  CHECK(d.dual.graph.edges[0] == std::pair<int, int>{0, 0});
  CHECK(euler_genus(d.dual) == 0);
  CHECK(d.face_of_dart == std::vector<int>{0, 0});
}

TEST_CASE("dual of a path is a single vertex with loops") {
  auto e = planar_embedding(path_graph(3));
  auto d = dual_graph(e);
  CHECK(d.dual.graph.n == 1);
  REQUIRE(d.dual.graph.m() == 2);
  for (auto [u, v] : d.dual.graph.edges) {
    CHECK(u == 0);
    CHECK(v == 0);
  }
  CHECK(euler_genus(d.dual) == 0);
}

TEST_CASE("dual of a triangle is two vertices with three parallel edges") {
  auto e = planar_embedding(cycle_graph(3));
  auto faces = trace_faces(e);
  REQUIRE(faces.size() == 2);
  auto d = dual_graph(e);
  CHECK(d.dual.graph.n == 2);
  REQUIRE(d.dual.graph.m() == 3);
  for (auto [u, v] : d.dual.graph.edges) CHECK(((u == 0 && v == 1) || (u == 1 && v == 0)));
  CHECK(euler_genus(d.dual) == 0);
}

TEST_CASE("dual of the cube is four-regular on six vertices") {
  auto e = planar_embedding(corpus_get("q3").graph);
  auto faces = trace_faces(e);
  REQUIRE(faces.size() == 6);
  for (const auto& f : faces) CHECK(f.size() == 4);
  auto d = dual_graph(e);
  CHECK(d.dual.graph.n == 6);
  CHECK(d.dual.graph.m() == 12);
  std::vector<int> deg(6, 0);
  for (auto [u, v] : d.dual.graph.edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int x : deg) CHECK(x == 4);
  CHECK(euler_genus(d.dual) == 0);
}

TEST_CASE("dualizing preserves edge count, genus, and flips n with f") {
  std::vector<EmbeddedGraph> cases;
  cases.push_back(torus_grid(3));
  cases.push_back(planar_embedding(corpus_get("k4").graph));
  cases.push_back(planar_embedding(corpus_get("grid3").graph));
  cases.push_back(planar_embedding(corpus_get("w6").graph));
  for (const auto& e : cases) {
    auto primal_faces = trace_faces(e);
    auto d = dual_graph(e);
    CHECK(d.dual.graph.n == static_cast<int>(primal_faces.size()));
    CHECK(d.dual.graph.m() == e.graph.m());
    CHECK(euler_genus(d.dual) == euler_genus(e));
    auto dd = dual_graph(d.dual);
    CHECK(dd.dual.graph.n == e.graph.n);
    CHECK(dd.dual.graph.m() == e.graph.m());
    CHECK(euler_genus(dd.dual) == euler_genus(e));
  }
}

TEST_CASE("the 3x3 torus dual is again a 9-vertex quadrangulation") {
  auto d = dual_graph(torus_grid(3));
  CHECK(d.dual.graph.n == 9);
  CHECK(d.dual.graph.m() == 18);
  CHECK(euler_genus(d.dual) == 1);
  auto faces = trace_faces(d.dual);
  CHECK(faces.size() == 9);
  for (const auto& f : faces) CHECK(f.size() == 4);
}

TEST_CASE("K5 admits a rotation of genus one, found deterministically") {
  auto g = complete_graph(5);
  // Fix the rotation at each vertex to one of the 3! = 6 cyclic orders of its
  // four darts with the smallest dart first; scan the 6^5 combinations in
  // counter order and keep the first that yields genus 1.
  std::vector<std::vector<Dart>> at(5);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    at[u].push_back(make_dart(e, 0));
    at[v].push_back(make_dart(e, 1));
  }
  std::vector<std::array<int, 3>> perms;
  {
    std::array<int, 3> p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  bool found = false;
  int found_faces = -1;
  long found_code = -1;
  for (long code = 0; code < 7776 && !found; ++code) {
    RotationSystem r;
    r.rot.assign(5, {});
    long c = code;
    for (int v = 0; v < 5; ++v) {
      const auto& p = perms[c % 6];
      c /= 6;
      r.rot[v] = {at[v][0], at[v][1 + p[0]], at[v][1 + p[1]], at[v][1 + p[2]]};
    }
    EmbeddedGraph e{g, r};
    if (euler_genus(e) == 1) {
      found = true;
      found_faces = static_cast<int>(trace_faces(e).size());
      found_code = code;
    }
  }
  REQUIRE(found);
  CHECK(found_faces == 5);
  CHECK(found_code >= 0);
}
