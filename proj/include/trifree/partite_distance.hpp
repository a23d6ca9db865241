#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trifree/graph.hpp"
#include "trifree/random_models.hpp"

namespace trifree {

/// Not necessarily proper colouring with colours 0..r-1.
struct RColoring {
  std::size_t r = 0;
  std::vector<std::uint32_t> color;
};

/// Edges whose endpoints share a colour.
std::size_t monochromatic_edges(const Graph& g, const RColoring& coloring);

struct CutResult {
  RColoring coloring;
  std::size_t cut = 0;       // bichromatic edges
  std::size_t distance = 0;  // m - cut
  bool exact = false;
};

CutResult make_cut_result(const Graph& g, RColoring coloring, bool exact);

/// Vertex cap of the exact r-colouring search for the given r.
std::size_t exact_vertex_cap(std::size_t r);

/// Maximum cut by branch and bound; v(g) <= exact_vertex_cap(2) = 28.
CutResult max_cut_exact(const Graph& g);

/// Minimum number of monochromatic edges over all r-colourings.
CutResult max_rcut_exact(const Graph& g, std::size_t r);

inline constexpr std::size_t kDefaultRestarts = 32;

/// Greedy start, single-vertex hill climbing and Kempe-chain swaps, best of
/// `restarts` independent runs. The distance is an upper bound on the truth.
CutResult rcut_local_search(const Graph& g, std::size_t r, std::size_t restarts, Seed seed);

/// chi'(i) = smallest colour j with |chi^{-1}(j) ∩ B_i| >= |B_i| / r.
/// `coloring.color` is indexed by vertex; only vertices of the parts are read.
std::vector<std::uint32_t> majority_coloring(const RColoring& coloring, const std::vector<VertexSet>& parts);

}  // namespace trifree
