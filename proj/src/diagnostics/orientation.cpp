#include <algorithm>
#include <bit>

#include "trifree/diagnostics.hpp"

namespace trifree {

VertexSet tilde_set(const Graph& h, const VertexSet& x, double gamma) {
  require(x.universe() == h.n(), "tilde_set: set has the wrong universe");
  VertexSet out(h.n());
  x.for_each([&](Vertex v) {
    const auto deg = h.degree(v);
    if (deg > 0 && static_cast<double>(degree_in(h, v, x)) >= gamma * static_cast<double>(deg)) out.insert(v);
  });
  return out;
}

std::vector<std::size_t> Orientation::in_degrees() const {
  std::vector<std::size_t> out(n, 0);
  for (const auto& [tail, head] : arcs) ++out[head];
  return out;
}

std::vector<std::vector<Vertex>> Orientation::in_neighbors() const {
  std::vector<std::vector<Vertex>> out(n);
  for (const auto& [tail, head] : arcs) out[head].push_back(tail);
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

Orientation orient_edges(const Graph& gamma, const Graph& hp, const VertexSet& x, const VertexSet& y,
                         const VertexSet& tilde) {
  const std::size_t n = gamma.n();
  require(hp.n() == n && x.universe() == n && y.universe() == n && tilde.universe() == n,
          "orient_edges: size mismatch");
  require(x.disjoint(y), "orient_edges: X and Y must be disjoint");
  require(hp.is_subgraph_of(gamma), "orient_edges: Hp is not a subgraph of Gamma");

  Orientation out;
  out.n = n;
  out.tilde = tilde;
  const auto yw = y.words();
  hp.for_each_edge([&](Vertex u, Vertex v) {
    if (!x.contains(u) || !x.contains(v)) return;
    Vertex head = u, other = v;
    if (tilde.contains(v) && !tilde.contains(u)) std::swap(head, other);
    const auto gx = gamma.row(head), go = gamma.row(other), hx = hp.row(head);
    std::size_t common = 0, deleted = 0;
    for (std::size_t i = 0; i < yw.size(); ++i) {
      const auto both = gx[i] & go[i] & yw[i];
      common += static_cast<std::size_t>(std::popcount(both));
      deleted += static_cast<std::size_t>(std::popcount(both & ~hx[i]));
    }
    if (3 * deleted >= 2 * common)
      out.arcs.emplace_back(other, head);
    else
      out.arcs.emplace_back(head, other);
  });
  return out;
}

std::vector<InStar> greedy_in_stars(const Orientation& orientation, std::size_t s, const VertexSet& exclude) {
  require(s >= 1, "greedy_in_stars: s must be positive");
  require(exclude.universe() == orientation.n, "greedy_in_stars: exclude set has the wrong universe");
  const auto in = orientation.in_neighbors();
  std::vector<char> used(orientation.n, 0);
  std::vector<InStar> stars;
  // Single pass: available in-degrees only shrink, so a skipped centre never qualifies later.
  for (Vertex c = 0; c < orientation.n; ++c) {
    if (exclude.contains(c) || used[c] || in[c].size() < s) continue;
    InStar star{c, {}};
    for (Vertex t : in[c]) {
      if (used[t]) continue;
      star.leaves.push_back(t);
      if (star.leaves.size() == s) break;
    }
    if (star.leaves.size() < s) continue;
    used[c] = 1;
    for (Vertex t : star.leaves) used[t] = 1;
    stars.push_back(std::move(star));
  }
  return stars;
}

}  // namespace trifree
