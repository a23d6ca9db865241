#include "trifree/spotcheck.hpp"

#include <algorithm>
#include <limits>

namespace trifree {

std::optional<ForcedPair> forced_monochromatic_pair(const Graph& g, const std::vector<VertexSet>& parts,
                                                    const Graph& f, const RColoring& coloring) {
  require(parts.size() == f.n(), "one class per gadget vertex required");
  const auto majority = majority_coloring(coloring, parts);
  std::optional<ForcedPair> best;
  f.for_each_edge([&](Vertex i, Vertex j) {
    if (majority[i] != majority[j]) return;
    const auto color = majority[i];
    VertexSet bi(g.n()), bj(g.n());
    parts[i].for_each([&](Vertex v) {
      if (coloring.color[v] == color) bi.insert(v);
    });
    parts[j].for_each([&](Vertex v) {
      if (coloring.color[v] == color) bj.insert(v);
    });
    const auto e = edges_between(g, bi, bj);
    if (!best || e > best->edges) best = ForcedPair{i, j, color, e};
  });
  return best;
}

namespace {

struct BSideSolution {
  std::size_t distance = 0;
  RColoring coloring;  // indexed by original vertex
};

BSideSolution solve_b_side(const Graph& g, const VertexSet& b, std::size_t r, std::size_t restarts, Seed seed) {
  std::vector<Vertex> original;
  const Graph sub = g.induced(b, &original);
  const auto result = rcut_local_search(sub, r, restarts, seed);
  BSideSolution out{result.distance, RColoring{r, std::vector<std::uint32_t>(g.n(), 0)}};
  for (std::size_t k = 0; k < original.size(); ++k) out.coloring.color[original[k]] = result.coloring.color[k];
  return out;
}

}  // namespace

SpotcheckReport far_from_rpartite_spotcheck(const ConstructionTrace& trace, const ConstructionParams& params,
                                            std::size_t samples, Seed seed, std::size_t restarts) {
  const auto& b = trace.layout.halves.b;
  const auto& f = params.gadget.graph;
  const Graph g2b = trace.g2.filter_edges([&](Vertex u, Vertex v) { return b.contains(u) && b.contains(v); });

  SpotcheckReport report;
  report.threshold = 2.0 * params.c / params.p * static_cast<double>(params.n);
  report.b_edges_g2 = g2b.m();

  auto add_entry = [&](std::string source, const RColoring& coloring) {
    SpotcheckEntry entry{std::move(source), monochromatic_edges(g2b, coloring),
                         forced_monochromatic_pair(g2b, trace.layout.parts, f, coloring)};
    report.entries.push_back(std::move(entry));
  };

  auto rng = make_rng(seed, streams::kSampling);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(params.r - 1));
  for (std::size_t s = 0; s < samples; ++s) {
    RColoring coloring{params.r, std::vector<std::uint32_t>(trace.g2.n(), 0)};
    b.for_each([&](Vertex v) { coloring.color[v] = pick(rng); });
    add_entry("random", coloring);
  }

  const auto g2_best = solve_b_side(trace.g2, b, params.r, restarts, seed);
  report.heuristic_distance_g2b = g2_best.distance;
  add_entry("heuristic", g2_best.coloring);
  report.heuristic_distance_g3b = solve_b_side(trace.g3, b, params.r, restarts, seed).distance;

  report.all_exceed = true;
  report.min_forced = std::numeric_limits<std::size_t>::max();
  for (const auto& e : report.entries) {
    const std::size_t forced = e.forced ? e.forced->edges : 0;
    report.min_forced = std::min(report.min_forced, forced);
    report.all_exceed = report.all_exceed && static_cast<double>(forced) > report.threshold;
  }
  return report;
}

}  // namespace trifree
