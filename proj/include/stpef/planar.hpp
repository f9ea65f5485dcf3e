#ifndef STPEF_PLANAR_HPP
#define STPEF_PLANAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stpef/surface.hpp"

namespace stpef {

struct PlanarityResult {
  bool planar = false;
  RotationSystem rotation;  // valid genus-0 rotation when planar
  std::string witness;      // strategy-dependent note when non-planar
};

// Incremental face-extension planarity test (Demoucron-Malgrange-Pertuiset)
// per biconnected block, blocks glued at cut vertices, loops and parallel
// edges reinserted next to their mates. Quadratic; returns an embedding whose
// Euler genus is checked to be 0 before returning.
PlanarityResult is_planar(const Multigraph& g);

enum class PlanarizerStrategy { greedy_degree, bfs_layers };

PlanarizerStrategy planarizer_from_name(const std::string& name);
std::string planarizer_name(PlanarizerStrategy s);

// Returns an ascending vertex set X with G - X planar (possibly empty).
//   greedy-degree: repeatedly delete the max-degree vertex of the 2-core of
//     G - X (ties to the smallest index) until planar.
//   bfs-layers: with w = ceil(sqrt(|V|/max(g,1))), try each offset o < w,
//     delete the BFS layers congruent to o mod w, repair greedily, then prune
//     redundant deletions; keep the smallest result (ties to smallest o).
// Deterministic for a fixed seed (the seed is reserved; both strategies are
// index-deterministic and do not consume randomness).
std::vector<int> planarizing_set(const Multigraph& g, PlanarizerStrategy s, int genus_hint,
                                 std::uint64_t seed);

}  // namespace stpef

#endif
