#pragma once

#include <cstddef>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

/// Largest order accepted by chromatic_number_exact.
inline constexpr std::size_t kChromaticCap = 25;

/// Mycielski construction: vertices 0..n-1 copy g, n..2n-1 are the shadows
/// (shadow of v is joined to N(v)), 2n is the apex joined to all shadows.
Graph mycielskian(const Graph& g);

/// Triangle-free graph with chromatic number r + 1.
struct Gadget {
  Graph graph;
  std::size_t r = 0;
  std::size_t chromatic_number = 0;
  std::size_t order() const { return graph.n(); }
};

/// (r-1)-fold Mycielski iterate of K2, certified by the exact colouring oracle.
/// Throws CapacityError when the iterate exceeds kChromaticCap vertices.
Gadget gadget_for(std::size_t r);

/// Exact chromatic number by DSATUR branch and bound. v(g) <= kChromaticCap.
std::size_t chromatic_number_exact(const Graph& g);

/// True when g admits a proper k-colouring (same search, fixed k).
bool is_k_colorable(const Graph& g, std::size_t k);

/// Splits B into `parts` contiguous blocks whose sizes differ by at most one,
/// larger blocks first.
std::vector<VertexSet> blow_up_parts(const VertexSet& b, std::size_t parts);

}  // namespace trifree
