#ifndef STPEF_GRAPH_HPP
#define STPEF_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "stpef/rational.hpp"

namespace stpef {

// Undirected multigraph on dense vertex indices 0..n-1. Edge identity is the
// position in `edges`; no operation ever reorders or deduplicates it. Loops
// and parallel edges are allowed unless `simple` is set.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  bool simple = false;

  int m() const { return static_cast<int>(edges.size()); }
};

// Validates endpoints and, when simple=true, the absence of loops and
// parallel edges. Throws std::invalid_argument on violation.
Multigraph new_multigraph(int n, std::vector<std::pair<int, int>> edges, bool simple);

// Per-edge exact weights, same length as g.edges.
using Weighting = RatVec;

// Vertex partition into connected components, ordered by smallest member;
// members ascending. Isolated vertices are their own components.
std::vector<std::vector<int>> components(const Multigraph& g);

bool is_connected(const Multigraph& g);

struct MstResult {
  std::vector<int> tree_edges;  // ascending edge indices
  Rat weight;
};

// Exact Kruskal; ties broken by smallest edge index. Requires a connected
// graph (throws otherwise). Negative weights are fine.
MstResult kruskal_mst(const Multigraph& g, const Weighting& w);

// All spanning trees as ascending edge-index lists, in lexicographic order.
// Guard: requires a connected graph with at most 30 edges (throws otherwise);
// this is an oracle for small instances, not a counting algorithm.
std::vector<std::vector<int>> enumerate_spanning_trees(const Multigraph& g);

// Number of spanning trees via the Matrix-Tree theorem (exact).
Rat count_spanning_trees(const Multigraph& g);

// Induced subgraph on `keep` (strictly ascending original indices).
// vertex_of/edge_of map the subgraph's dense indices back to g's.
struct Subgraph {
  Multigraph graph;
  std::vector<int> vertex_of;
  std::vector<int> edge_of;
};
Subgraph induced_subgraph(const Multigraph& g, const std::vector<int>& keep);

// Complement of `drop` inside 0..n-1, ascending. Convenience for G - X.
std::vector<int> keep_after_deletion(int n, const std::vector<int>& drop);

}  // namespace stpef

#endif
