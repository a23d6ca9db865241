#include "trifree/gadgets.hpp"

#include <bit>
#include <cstdint>

namespace trifree {

Graph mycielskian(const Graph& g) {
  require(g.m() >= 1, "mycielskian needs a graph with at least one edge");
  const auto n = static_cast<Vertex>(g.n());
  GraphBuilder b(2 * g.n() + 1);
  g.for_each_edge([&](Vertex u, Vertex v) {
    b.add_edge(u, v);
    b.add_edge(n + u, v);
    b.add_edge(u, n + v);
  });
  for (Vertex v = 0; v < n; ++v) b.add_edge(n + v, 2 * n);
  return std::move(b).build();
}

namespace {

/// DSATUR backtracking over bitmask adjacency for graphs with <= 32 vertices.
class ColoringSearch {
 public:
  explicit ColoringSearch(const Graph& g) : n_(g.n()), adj_(g.n(), 0), color_(g.n(), -1) {
    for (Vertex v = 0; v < n_; ++v) g.for_each_neighbor(v, [&](Vertex u) { adj_[v] |= 1u << u; });
  }

  bool colorable(std::size_t k) {
    k_ = k;
    std::fill(color_.begin(), color_.end(), -1);
    class_masks_.assign(k, 0);
    if (n_ == 0) return true;
    if (k == 0) return false;
    return extend(n_, 0);
  }

 private:
  bool extend(std::size_t remaining, std::size_t used) {
    if (remaining == 0) return true;
    // Most saturated uncoloured vertex, ties by larger uncoloured degree.
    int best = -1;
    int best_sat = -1, best_deg = -1;
    std::uint32_t uncolored = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (color_[v] < 0) uncolored |= 1u << v;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int sat = 0;
      for (std::size_t c = 0; c < used; ++c)
        if (adj_[v] & class_masks_[c]) ++sat;
      const int deg = std::popcount(adj_[v] & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = static_cast<int>(v);
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (best_sat >= static_cast<int>(k_)) return false;
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (adj_[best] & class_masks_[c]) continue;
      color_[best] = static_cast<int>(c);
      class_masks_[c] |= 1u << best;
      if (extend(remaining - 1, std::max(used, c + 1))) return true;
      class_masks_[c] &= ~(1u << best);
      color_[best] = -1;
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_ = 0;
  std::vector<std::uint32_t> adj_;
  std::vector<int> color_;
  std::vector<std::uint32_t> class_masks_;
};

void check_chromatic_cap(const Graph& g) {
  if (g.n() > kChromaticCap)
    throw CapacityError("exact colouring is capped at " + std::to_string(kChromaticCap) + " vertices, got " +
                        std::to_string(g.n()));
}

}  // namespace

bool is_k_colorable(const Graph& g, std::size_t k) {
  check_chromatic_cap(g);
  return ColoringSearch(g).colorable(k);
}

std::size_t chromatic_number_exact(const Graph& g) {
  check_chromatic_cap(g);
  if (g.n() == 0) return 0;
  ColoringSearch search(g);
  std::size_t k = g.m() > 0 ? 2 : 1;
  while (!search.colorable(k)) ++k;
  return k;
}

Gadget gadget_for(std::size_t r) {
  require(r >= 2, "gadget_for needs r >= 2");
  Graph f = Graph::complete(2);
  for (std::size_t i = 1; i < r; ++i) {
    if (2 * f.n() + 1 > kChromaticCap)
      throw CapacityError("gadget for r = " + std::to_string(r) + " exceeds the colouring oracle cap");
    f = mycielskian(f);
  }
  Gadget gadget{std::move(f), r, 0};
  gadget.chromatic_number = chromatic_number_exact(gadget.graph);
  if (gadget.chromatic_number != r + 1 || !triangle_census(gadget.graph).triangle_free())
    throw std::logic_error("Mycielski iterate failed certification");
  return gadget;
}

std::vector<VertexSet> blow_up_parts(const VertexSet& b, std::size_t parts) {
  require(parts >= 1, "blow_up_parts needs at least one part");
  require(parts <= b.size(), "more parts than vertices in B");
  const auto members = b.to_vector();
  const std::size_t base = members.size() / parts, extra = members.size() % parts;
  std::vector<VertexSet> out;
  out.reserve(parts);
  std::size_t next = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    VertexSet part(b.universe());
    const std::size_t size = base + (i < extra ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j) part.insert(members[next++]);
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace trifree
