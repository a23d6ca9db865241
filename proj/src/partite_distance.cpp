#include "trifree/partite_distance.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>

#include "trifree/parallel.hpp"

namespace trifree {

std::size_t monochromatic_edges(const Graph& g, const RColoring& coloring) {
  require(coloring.color.size() == g.n(), "colouring does not cover the graph");
  std::size_t mono = 0;
  g.for_each_edge([&](Vertex u, Vertex v) { mono += coloring.color[u] == coloring.color[v]; });
  return mono;
}

CutResult make_cut_result(const Graph& g, RColoring coloring, bool exact) {
  CutResult result;
  result.distance = monochromatic_edges(g, coloring);
  result.cut = g.m() - result.distance;
  result.coloring = std::move(coloring);
  result.exact = exact;
  return result;
}

std::size_t exact_vertex_cap(std::size_t r) {
  switch (r) {
    case 0:
    case 1:
      return 32;
    case 2:
      return 28;
    case 3:
      return 18;
    case 4:
      return 14;
    default:
      return 12;
  }
}

namespace {

/// Depth-first assignment in decreasing-degree order. Lower bound: current
/// monochromatic edges plus, for every unassigned vertex, its cheapest colour
/// against the already assigned vertices.
class RCutSearch {
 public:
  RCutSearch(const Graph& g, std::size_t r) : n_(g.n()), r_(r), adj_(g.n(), 0), class_(r, 0) {
    for (Vertex v = 0; v < n_; ++v) g.for_each_neighbor(v, [&](Vertex u) { adj_[v] |= 1u << u; });
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    color_.assign(n_, 0);
    seed_with_greedy();
  }

  RColoring solve() {
    std::fill(class_.begin(), class_.end(), 0u);
    search(0, 0, 0);
    return RColoring{r_, best_color_};
  }

 private:
  void seed_with_greedy() {
    std::vector<std::uint32_t> masks(r_, 0);
    best_ = 0;
    best_color_.assign(n_, 0);
    for (Vertex v : order_) {
      std::size_t pick = 0, cost = std::numeric_limits<std::size_t>::max();
      for (std::size_t c = 0; c < r_; ++c) {
        const auto k = static_cast<std::size_t>(std::popcount(adj_[v] & masks[c]));
        if (k < cost) cost = k, pick = c;
      }
      masks[pick] |= 1u << v;
      best_color_[v] = static_cast<std::uint32_t>(pick);
      best_ += cost;
    }
  }

  std::size_t bound(std::size_t depth, std::size_t used) const {
    if (used < r_) return 0;  // an unused colour is free for every vertex
    std::size_t total = 0;
    for (std::size_t k = depth; k < n_; ++k) {
      const auto v = order_[k];
      std::size_t cheapest = std::numeric_limits<std::size_t>::max();
      for (std::size_t c = 0; c < r_ && cheapest > 0; ++c)
        cheapest = std::min(cheapest, static_cast<std::size_t>(std::popcount(adj_[v] & class_[c])));
      total += cheapest;
    }
    return total;
  }

  void search(std::size_t depth, std::size_t used, std::size_t mono) {
    if (mono >= best_) return;
    if (depth == n_) {
      best_ = mono;
      best_color_ = color_;
      return;
    }
    if (mono + bound(depth, used) >= best_) return;
    const Vertex v = order_[depth];
    const std::size_t limit = std::min(r_, used + 1);
    std::array<std::pair<std::size_t, std::size_t>, 32> options{};
    for (std::size_t c = 0; c < limit; ++c)
      options[c] = {static_cast<std::size_t>(std::popcount(adj_[v] & class_[c])), c};
    std::sort(options.begin(), options.begin() + static_cast<std::ptrdiff_t>(limit));
    for (std::size_t i = 0; i < limit; ++i) {
      const auto [added, c] = options[i];
      class_[c] |= 1u << v;
      color_[v] = static_cast<std::uint32_t>(c);
      search(depth + 1, std::max(used, c + 1), mono + added);
      class_[c] &= ~(1u << v);
      if (best_ == 0) return;
    }
  }

  std::size_t n_, r_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> class_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> color_;
  std::size_t best_ = 0;
  std::vector<std::uint32_t> best_color_;
};

}  // namespace

CutResult max_rcut_exact(const Graph& g, std::size_t r) {
  require(r >= 1 && r <= 32, "r must lie in [1, 32]");
  const auto cap = exact_vertex_cap(r);
  if (g.n() > cap)
    throw CapacityError("exact " + std::to_string(r) + "-cut is capped at " + std::to_string(cap) +
                        " vertices, got " + std::to_string(g.n()));
  if (g.n() == 0) return make_cut_result(g, RColoring{r, {}}, true);
  return make_cut_result(g, RCutSearch(g, r).solve(), true);
}

CutResult max_cut_exact(const Graph& g) { return max_rcut_exact(g, 2); }

namespace {

/// One local-search run over compressed adjacency with per-vertex colour counts.
class LocalSearch {
 public:
  LocalSearch(const std::vector<std::vector<Vertex>>& adj, std::size_t r)
      : adj_(adj), n_(adj.size()), r_(r), color_(adj.size(), 0), counts_(adj.size() * r, 0) {}

  std::size_t run(std::mt19937_64& rng) {
    greedy_start(rng);
    while (true) {
      hill_climb();
      if (!kempe_pass()) break;
    }
    return mono_;
  }

  const std::vector<std::uint32_t>& coloring() const { return color_; }

 private:
  std::uint32_t& count(Vertex v, std::size_t c) { return counts_[v * r_ + c]; }

  void greedy_start(std::mt19937_64& rng) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::shuffle(order_.begin(), order_.end(), rng);
    std::fill(counts_.begin(), counts_.end(), 0u);
    mono_ = 0;
    for (Vertex v : order_) {
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      std::size_t pick = 0, ties = 0;
      for (std::size_t c = 0; c < r_; ++c) {
        const auto k = count(v, c);
        if (k < best) {
          best = k, pick = c, ties = 1;
        } else if (k == best && std::uniform_int_distribution<std::size_t>(0, ties++)(rng) == 0) {
          pick = c;
        }
      }
      color_[v] = static_cast<std::uint32_t>(pick);
      mono_ += best;
      for (Vertex u : adj_[v]) ++count(u, pick);
    }
  }

  void recolor(Vertex v, std::uint32_t to) {
    const auto from = color_[v];
    mono_ = mono_ - count(v, from) + count(v, to);
    color_[v] = to;
    for (Vertex u : adj_[v]) {
      --count(u, from);
      ++count(u, to);
    }
  }

  void hill_climb() {
    bool moved = true;
    while (moved) {
      moved = false;
      for (Vertex v : order_) {
        std::uint32_t best = color_[v];
        for (std::size_t c = 0; c < r_; ++c)
          if (count(v, c) < count(v, best)) best = static_cast<std::uint32_t>(c);
        if (best != color_[v]) {
          recolor(v, best);
          moved = true;
        }
      }
    }
  }

  /// Swaps colours i and j on components of the bichromatic {i, j} subgraph.
  /// Every edge leaving such a component towards colours i or j is
  /// monochromatic, so a swap fixes all of them and breaks nothing.
  bool kempe_pass() {
    bool improved = false;
    std::vector<std::int64_t> comp(n_);
    std::vector<Vertex> stack, members;
    for (std::uint32_t i = 0; i < r_; ++i) {
      for (std::uint32_t j = i + 1; j < r_; ++j) {
        bool swapped = true;
        while (swapped) {
          swapped = false;
          std::fill(comp.begin(), comp.end(), -1);
          std::vector<char> blocked;
          std::vector<std::vector<Vertex>> components;
          for (Vertex s = 0; s < n_; ++s) {
            if (comp[s] >= 0 || (color_[s] != i && color_[s] != j)) continue;
            const auto id = static_cast<std::int64_t>(components.size());
            members.clear();
            stack.assign(1, s);
            comp[s] = id;
            while (!stack.empty()) {
              const Vertex v = stack.back();
              stack.pop_back();
              members.push_back(v);
              for (Vertex u : adj_[v]) {
                if (comp[u] < 0 && (color_[u] == i || color_[u] == j) && color_[u] != color_[v]) {
                  comp[u] = id;
                  stack.push_back(u);
                }
              }
            }
            components.push_back(members);
          }
          blocked.assign(components.size(), 0);
          for (std::size_t id = 0; id < components.size(); ++id) {
            if (blocked[id]) continue;
            std::size_t gain = 0;
            for (Vertex v : components[id])
              for (Vertex u : adj_[v])
                if (color_[u] == color_[v] && comp[u] != static_cast<std::int64_t>(id)) ++gain;
            if (gain == 0) continue;
            for (Vertex v : components[id])
              for (Vertex u : adj_[v])
                if (color_[u] == color_[v] && comp[u] != static_cast<std::int64_t>(id)) blocked[comp[u]] = 1;
            for (Vertex v : components[id]) recolor(v, color_[v] == i ? j : i);
            swapped = improved = true;
          }
        }
      }
    }
    return improved;
  }

  const std::vector<std::vector<Vertex>>& adj_;
  std::size_t n_, r_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> counts_;
  std::vector<Vertex> order_;
  std::size_t mono_ = 0;
};

}  // namespace

CutResult rcut_local_search(const Graph& g, std::size_t r, std::size_t restarts, Seed seed) {
  require(r >= 2, "rcut_local_search needs r >= 2");
  restarts = std::max<std::size_t>(restarts, 1);
  const auto adj = g.adjacency_lists();
  std::vector<std::size_t> scores(restarts);
  std::vector<std::vector<std::uint32_t>> colorings(restarts);
  parallel_for(restarts, [&](std::size_t k) {
    auto rng = make_rng(seed, streams::kLocalSearch ^ mix64(k + 1));
    LocalSearch search(adj, r);
    scores[k] = search.run(rng);
    colorings[k] = search.coloring();
  });
  const auto best = static_cast<std::size_t>(std::min_element(scores.begin(), scores.end()) - scores.begin());
  return make_cut_result(g, RColoring{r, std::move(colorings[best])}, false);
}

std::vector<std::uint32_t> majority_coloring(const RColoring& coloring, const std::vector<VertexSet>& parts) {
  require(coloring.r >= 1, "colouring needs r >= 1");
  std::vector<std::uint32_t> out;
  out.reserve(parts.size());
  std::vector<std::size_t> tally(coloring.r);
  for (const auto& part : parts) {
    std::fill(tally.begin(), tally.end(), 0);
    part.for_each([&](Vertex v) {
      require(v < coloring.color.size() && coloring.color[v] < coloring.r, "colouring undefined on a part vertex");
      ++tally[coloring.color[v]];
    });
    // |chi^{-1}(j) ∩ B_i| >= |B_i| / r  <=>  r * count >= |B_i|.
    std::uint32_t pick = 0;
    while (coloring.r * tally[pick] < part.size()) ++pick;
    out.push_back(pick);
  }
  return out;
}

}  // namespace trifree
