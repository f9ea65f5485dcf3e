#ifndef STPEF_CORPUS_HPP
#define STPEF_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "stpef/surface.hpp"

namespace stpef {

// k >= 3. Vertex (i,j) -> i*k + j. Per vertex in index order: right edge
// (i,j)-(i,j+1 mod k) then down edge (i,j)-(i+1 mod k,j); m = 2k^2. The
// attached rotation (right, down, left, up) is the flat torus embedding with
// k^2 quadrilateral faces.
EmbeddedGraph torus_grid(int k);

// k >= 2. Same vertex layout without wraparound; m = 2k(k-1).
Multigraph planar_grid(int k);

Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
Multigraph complete_bipartite(int a, int b);

// Outer cycle 0..4, inner pentagram 5..9, spokes i-(5+i); m = 15.
Multigraph petersen();

// Rim cycle 0..rim-1 plus hub vertex `rim`; n = rim+1, m = 2*rim.
Multigraph wheel(int rim);

// wheel(6) plus an apex vertex adjacent to all 7 of its vertices; n=8, m=19.
Multigraph wheel_apex();

// A named corpus graph. `genus` is externally supplied knowledge (orientable
// genus), -1 when not pinned; planar graphs carry 0.
struct NamedGraph {
  std::string name;
  Multigraph graph;
  int genus = -1;
};

// The standard test zoo: small named graphs, bridges and cut vertices
// included, plus the torus grids and complete graphs the suites use.
std::vector<NamedGraph> corpus_all();

// Lookup by name; throws std::invalid_argument if absent.
NamedGraph corpus_get(const std::string& name);

}  // namespace stpef

#endif
