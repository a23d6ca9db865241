#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trifree/construction.hpp"
#include "trifree/partite_distance.hpp"

namespace trifree {

/// A gadget edge ij whose classes receive the same majority colour, with the
/// number of edges between the majority-coloured subsets B'_i and B'_j.
struct ForcedPair {
  std::size_t i = 0, j = 0;
  std::uint32_t color = 0;
  std::size_t edges = 0;
};

/// Applies the majority colouring to the classes and returns the gadget edge
/// with equal majority colours that carries the most edges between B'_i, B'_j
/// in g. Empty only when the majority colouring is proper on F.
std::optional<ForcedPair> forced_monochromatic_pair(const Graph& g, const std::vector<VertexSet>& parts,
                                                    const Graph& f, const RColoring& coloring);

struct SpotcheckEntry {
  std::string source;  // "random" or "heuristic"
  std::size_t monochromatic = 0;  // in G2[B]
  std::optional<ForcedPair> forced;
};

struct SpotcheckReport {
  std::vector<SpotcheckEntry> entries;
  double threshold = 0;  // 2 c p^-1 n
  std::size_t min_forced = 0;
  bool all_exceed = false;
  std::size_t b_edges_g2 = 0;
  std::size_t heuristic_distance_g2b = 0;
  std::size_t heuristic_distance_g3b = 0;
};

/// Evaluates `samples` random r-colourings of B plus the local-search optimum
/// on G2[B]: each is mapped to its majority colouring and the forced
/// monochromatic edge count is compared with 2 c p^-1 n.
SpotcheckReport far_from_rpartite_spotcheck(const ConstructionTrace& trace, const ConstructionParams& params,
                                            std::size_t samples, Seed seed,
                                            std::size_t restarts = kDefaultRestarts);

}  // namespace trifree
