#ifndef STPEF_SURFACE_HPP
#define STPEF_SURFACE_HPP

#include <vector>

#include "stpef/graph.hpp"

namespace stpef {

// A dart is one of the two ends of an edge: dart = 2*edge + end, end in {0,1}.
// End 0 sits at edges[e].first, end 1 at edges[e].second. A loop contributes
// two distinct darts at the same vertex.
using Dart = int;

inline int dart_edge(Dart d) { return d >> 1; }
inline int dart_end(Dart d) { return d & 1; }
inline Dart dart_mate(Dart d) { return d ^ 1; }
inline Dart make_dart(int edge, int end) { return 2 * edge + end; }

// Combinatorial (orientable) embedding: a cyclic order of darts at every
// vertex. rot[v] lists the darts whose endpoint is v, in rotation order.
struct RotationSystem {
  std::vector<std::vector<Dart>> rot;
};

struct EmbeddedGraph {
  Multigraph graph;
  RotationSystem rotation;
};

// Checks that the rotation is a permutation of all darts placing each dart at
// its own endpoint. Throws std::invalid_argument otherwise.
void validate_rotation(const Multigraph& g, const RotationSystem& r);

// Faces as closed dart walks. The successor of dart d in its face is the dart
// after mate(d) in the rotation at mate(d)'s vertex. Every dart lies on
// exactly one face; faces are listed in order of their smallest dart, each
// walk starting at its smallest dart.
std::vector<std::vector<Dart>> trace_faces(const EmbeddedGraph& e);

// Orientable genus from Euler's formula, per connected component:
// sum over components of (2 - n_c + m_c - f_c)/2. Always a nonnegative
// integer for a valid rotation system.
int euler_genus(const EmbeddedGraph& e);

// Dual graph: one vertex per face, one edge per primal edge joining the faces
// on its two sides (dual edge index == primal edge index). Bridges give
// loops, faces sharing several edges give parallels. The dual rotation at a
// face is the face walk order, so the result is itself embedded (in the same
// surface) and dualizing twice gets back a graph isomorphic to the primal.
struct DualResult {
  EmbeddedGraph dual;
  std::vector<int> face_of_dart;  // primal dart -> face index (dual vertex)
};
DualResult dual_graph(const EmbeddedGraph& e);

}  // namespace stpef

#endif
