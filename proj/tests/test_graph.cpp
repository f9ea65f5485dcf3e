#include <doctest.h>

#include <algorithm>
#include <set>

#include "stpef/corpus.hpp"
#include "stpef/graph.hpp"

using namespace stpef;

TEST_CASE("rationals parse and print canonically") {
  CHECK(rat_str(rat_parse("4/6")) == "2/3");
  CHECK(rat_str(rat_parse("-4/6")) == "-2/3");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_parse("10/5") == rat(2));
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("multigraph validation") {
  CHECK_THROWS_AS(new_multigraph(2, {{0, 2}}, false), std::invalid_argument);
  CHECK_THROWS_AS(new_multigraph(2, {{0, 0}}, true), std::invalid_argument);
  CHECK_THROWS_AS(new_multigraph(2, {{0, 1}, {1, 0}}, true), std::invalid_argument);
  auto g = new_multigraph(3, {{0, 1}, {1, 0}, {2, 2}}, false);
  CHECK(g.m() == 3);
}

TEST_CASE("components are ordered by smallest member") {
  auto g = new_multigraph(6, {{4, 5}, {1, 2}}, true);
  auto c = components(g);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == std::vector<int>{0});
  CHECK(c[1] == std::vector<int>{1, 2});
  CHECK(c[2] == std::vector<int>{3});
  CHECK(c[3] == std::vector<int>{4, 5});
  CHECK(!is_connected(g));
  CHECK(is_connected(corpus_get("petersen").graph));
}

TEST_CASE("kruskal on the triangle") {
  auto g = cycle_graph(3);
  auto r = kruskal_mst(g, {rat(1), rat(2), rat(3)});
  CHECK(r.weight == rat(3));
  CHECK(r.tree_edges == std::vector<int>{0, 1});
}

TEST_CASE("kruskal breaks ties by edge index") {
  auto g = cycle_graph(4);
  auto r = kruskal_mst(g, {rat(1), rat(1), rat(1), rat(1)});
  CHECK(r.tree_edges == std::vector<int>{0, 1, 2});
  CHECK(r.weight == rat(3));
}

TEST_CASE("kruskal is exact on rational weights") {
  auto g = cycle_graph(3);
  auto r = kruskal_mst(g, {rat(1, 3), rat(1, 2), rat(1, 6)});
  CHECK(r.weight == rat(1, 2));
  CHECK(r.tree_edges == std::vector<int>{0, 2});
}

TEST_CASE("kruskal matches brute force on K4") {
  auto g = complete_graph(4);
  auto trees = enumerate_spanning_trees(g);
  REQUIRE(trees.size() == 16);

  auto brute = [&](const Weighting& w) {
    Rat best;
    bool first = true;
    for (const auto& t : trees) {
      Rat s(0);
      for (int e : t) s += w[e];
      if (first || s < best) {
        best = s;
        first = false;
      }
    }
    return best;
  };

  Weighting w1 = {rat(5), rat(1), rat(1), rat(1), rat(1), rat(5)};
  CHECK(kruskal_mst(g, w1).weight == rat(3));
  CHECK(brute(w1) == rat(3));

  Weighting w2 = {rat(-1), rat(2), rat(-3), rat(4), rat(-5), rat(6)};
  CHECK(kruskal_mst(g, w2).weight == brute(w2));

  Weighting w3 = {rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11), rat(1, 13)};
  CHECK(kruskal_mst(g, w3).weight == brute(w3));
}

TEST_CASE("kruskal requires connectivity") {
  auto g = new_multigraph(4, {{0, 1}, {2, 3}}, true);
  CHECK_THROWS_AS(kruskal_mst(g, {rat(1), rat(1)}), std::invalid_argument);
}

TEST_CASE("kruskal on the 3x3 torus grid with unit weights") {
  auto g = torus_grid(3).graph;
  auto r = kruskal_mst(g, Weighting(g.m(), rat(1)));
  CHECK(r.weight == rat(8));
  CHECK(r.tree_edges.size() == 8);
}

TEST_CASE("spanning tree enumeration is lexicographic and complete") {
  auto g = complete_graph(4);
  auto trees = enumerate_spanning_trees(g);
  REQUIRE(trees.size() == 16);
  CHECK(trees.front() == std::vector<int>{0, 1, 2});
  CHECK(std::is_sorted(trees.begin(), trees.end()));
  std::set<std::vector<int>> uniq(trees.begin(), trees.end());
  CHECK(uniq.size() == trees.size());
  for (const auto& t : trees) {
    REQUIRE(t.size() == 3);
    Multigraph sub{g.n, {}, false};
    for (int e : t) sub.edges.push_back(g.edges[e]);
    CHECK(is_connected(sub));
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_spanning_trees(complete_graph(9)), std::invalid_argument);
  auto g = new_multigraph(4, {{0, 1}, {2, 3}}, true);
  CHECK_THROWS_AS(enumerate_spanning_trees(g), std::invalid_argument);
}

TEST_CASE("enumeration matches the Matrix-Tree count on K8") {
  // Largest instance the exact oracles enumerate: 8^6 trees.
  auto g = complete_graph(8);
  CHECK(enumerate_spanning_trees(g).size() == 262144);
  CHECK(count_spanning_trees(g) == rat(262144));
}

TEST_CASE("enumeration skips loops and keeps parallel edges distinct") {
  auto tri = new_multigraph(3, {{0, 1}, {1, 2}, {0, 2}, {1, 1}}, false);
  CHECK(enumerate_spanning_trees(tri).size() == 3);
  auto dbl = new_multigraph(2, {{0, 1}, {0, 1}}, false);
  auto trees = enumerate_spanning_trees(dbl);
  REQUIRE(trees.size() == 2);
  CHECK(trees[0] == std::vector<int>{0});
  CHECK(trees[1] == std::vector<int>{1});
}

TEST_CASE("matrix-tree counts agree with enumeration") {
  for (const char* name : {"c5", "k4", "bowtie", "q3", "petersen", "c3xc3"}) {
    auto g = corpus_get(name).graph;
    auto trees = enumerate_spanning_trees(g);
    CHECK(count_spanning_trees(g) == Rat(static_cast<long>(trees.size())));
  }
}

TEST_CASE("matrix-tree frozen values") {
  CHECK(count_spanning_trees(complete_graph(4)) == rat(16));
  CHECK(count_spanning_trees(complete_graph(5)) == rat(125));
  CHECK(count_spanning_trees(complete_graph(6)) == rat(1296));
  CHECK(count_spanning_trees(complete_graph(7)) == rat(16807));
  CHECK(count_spanning_trees(corpus_get("petersen").graph) == rat(2000));
  CHECK(count_spanning_trees(corpus_get("q3").graph) == rat(384));
  CHECK(count_spanning_trees(cycle_graph(5)) == rat(5));
  CHECK(count_spanning_trees(new_multigraph(1, {}, true)) == rat(1));
  CHECK(count_spanning_trees(new_multigraph(3, {{0, 1}}, true)) == rat(0));
}

TEST_CASE("induced subgraphs remap indices") {
  auto g = cycle_graph(3);
  auto s = induced_subgraph(g, {0, 2});
  CHECK(s.graph.n == 2);
  REQUIRE(s.graph.m() == 1);
  CHECK(s.graph.edges[0] == std::pair<int, int>{1, 0});  // endpoint order preserved
  CHECK(s.vertex_of == std::vector<int>{0, 2});
  CHECK(s.edge_of == std::vector<int>{2});
  CHECK_THROWS_AS(induced_subgraph(g, {2, 0}), std::invalid_argument);
}

TEST_CASE("deleting a torus row leaves one component") {
  auto g = torus_grid(5).graph;
  auto keep = keep_after_deletion(g.n, {0, 1, 2, 3, 4});
  CHECK(keep.size() == 20);
  auto s = induced_subgraph(g, keep);
  auto c = components(s.graph);
  REQUIRE(c.size() == 1);
  CHECK(c[0].size() == 20);
}

TEST_CASE("keep_after_deletion") {
  CHECK(keep_after_deletion(5, {1, 3}) == std::vector<int>{0, 2, 4});
  CHECK(keep_after_deletion(3, {}) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(keep_after_deletion(3, {3}), std::invalid_argument);
}
