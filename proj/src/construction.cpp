#include "trifree/construction.hpp"

#include <algorithm>
#include <cmath>

namespace trifree {

double lemma_constant(double eps, double big_k) { return std::min(eps / 2.0, 1.0 / (big_k * big_k)); }

double sparsification_probability(double c, double big_k, double p, std::size_t n) {
  require(p > 0.0 && n > 0, "sparsification_probability needs p > 0 and n > 0");
  return c * big_k * big_k / (p * p * static_cast<double>(n));
}

ConstructionParams derive_params(double gamma, std::size_t r, std::size_t n, double p, std::optional<double> c,
                                 Seed seed) {
  require(gamma > 0.0 && gamma < 0.5, "gamma must lie in (0, 1/2)");
  require(r >= 2, "r must be at least 2");
  require(p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  require(n >= 2, "n must be at least 2");
  if (c) require(*c > 0.0, "c must be positive");

  ConstructionParams params;
  params.gamma = gamma;
  params.r = r;
  params.n = n;
  params.p = p;
  params.seed = seed;
  params.gadget = gadget_for(r);
  params.ell = params.gadget.order();
  const double rr = static_cast<double>(r), ell = static_cast<double>(params.ell);
  params.big_k = 8.0 * rr * ell;
  params.eps = gamma / (400.0 * rr * rr * ell * ell);
  params.c_source = c ? CSource::kExplicit : CSource::kFormula;
  params.c = c ? *c : lemma_constant(params.eps, params.big_k);
  params.c_prime = std::min(1.0 / params.big_k, params.c / 1e4);
  params.pprime = sparsification_probability(params.c, params.big_k, p, n);
  if (params.pprime > 1.0)
    throw ParameterError("p' = " + std::to_string(params.pprime) + " exceeds 1; increase p or decrease c");

  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  params.valid = inv_sqrt_n / params.c_prime <= p && p <= params.c_prime;
  params.lemma_regime = params.big_k * inv_sqrt_n <= p &&
                        p <= params.eps * params.eps * params.c / (1e4 * params.big_k * params.big_k);
  return params;
}

ConstructionLayout ConstructionLayout::make(std::size_t n, std::size_t ell) {
  ConstructionLayout layout;
  layout.halves = GnppLayout::for_order(n);
  layout.parts = blow_up_parts(layout.halves.b, ell);
  layout.part_of.assign(n, -1);
  for (std::size_t i = 0; i < layout.parts.size(); ++i)
    layout.parts[i].for_each([&](Vertex v) { layout.part_of[v] = static_cast<int>(i); });
  return layout;
}

Graph stage_g1(const Graph& gamma, const ConstructionParams& params, const GnppLayout& halves) {
  require(gamma.n() == halves.n, "stage_g1: layout does not match graph order");
  auto rng = make_rng(params.seed, streams::kSparsify);
  std::bernoulli_distribution keep(std::clamp(params.pprime, 0.0, 1.0));
  return gamma.filter_edges([&](Vertex u, Vertex v) {
    const bool ua = halves.in_a(u), va = halves.in_a(v);
    if (ua && va) return false;
    if (!ua && !va) return keep(rng);
    return true;
  });
}

Graph stage_g2(const Graph& g1, const ConstructionLayout& layout, const Graph& f) {
  require(g1.n() == layout.halves.n, "stage_g2: layout does not match graph order");
  require(layout.parts.size() == f.n(), "stage_g2: one class per gadget vertex required");
  return g1.filter_edges([&](Vertex u, Vertex v) {
    const int pu = layout.part_of[u], pv = layout.part_of[v];
    if (pu < 0 || pv < 0) return (pu < 0) != (pv < 0);
    return pu != pv && f.has_edge(static_cast<Vertex>(pu), static_cast<Vertex>(pv));
  });
}

Graph stage_g3(const Graph& g2, const ConstructionParams& params, const GnppLayout& halves) {
  require(g2.n() == halves.n, "stage_g3: layout does not match graph order");
  const double upper = params.p * params.pprime * static_cast<double>(params.n);
  const double lower = upper / 10.0;
  std::vector<char> atypical(g2.n(), 0);
  halves.b.for_each([&](Vertex b) {
    const auto d = static_cast<double>(degree_in(g2, b, halves.b));
    atypical[b] = d >= upper || d <= lower;
  });
  return g2.filter_edges([&](Vertex u, Vertex v) {
    if (halves.in_b(u) && halves.in_b(v)) return !atypical[u] && !atypical[v];
    return true;
  });
}

Graph stage_h(const Graph& g3, const GnppLayout& halves, std::vector<std::size_t>* tallies) {
  require(g3.n() == halves.n, "stage_h: layout does not match graph order");
  require(edges_within(g3, halves.a) == 0, "stage_h: A must be independent");
  const auto b_words = halves.b.words();
  if (tallies) tallies->assign(g3.n(), 0);
  return g3.filter_edges([&](Vertex u, Vertex v) {
    // u < v, so an A-B edge has u in B and v in A.
    if (!(halves.in_b(u) && halves.in_a(v))) return true;
    if (!bits::intersects(g3.row(u), g3.row(v), b_words)) return true;
    if (tallies) {
      ++(*tallies)[u];
      ++(*tallies)[v];
    }
    return false;
  });
}

ConstructionTrace construct(const Graph& gamma, const ConstructionParams& params) {
  require(gamma.n() == params.n, "construct: graph order differs from params.n");
  ConstructionTrace trace;
  trace.layout = ConstructionLayout::make(params.n, params.ell);
  const auto& halves = trace.layout.halves;
  trace.valid = params.valid;

  trace.g1 = stage_g1(gamma, params, halves);
  trace.deleted.g1_a_internal = edges_within(gamma, halves.a);
  trace.deleted.g1_b_dropped = edges_within(gamma, halves.b) - edges_within(trace.g1, halves.b);

  trace.g2 = stage_g2(trace.g1, trace.layout, params.gadget.graph);
  trace.deleted.g2 = trace.g1.m() - trace.g2.m();

  trace.g3 = stage_g3(trace.g2, params, halves);
  trace.deleted.g3 = trace.g2.m() - trace.g3.m();

  trace.h = stage_h(trace.g3, halves, &trace.h_deletions);
  trace.deleted.h = trace.g3.m() - trace.h.m();

  trace.min_degree_h = trace.h.min_degree();
  trace.min_degree_target = (0.5 - params.gamma) * params.p * static_cast<double>(params.n);
  trace.min_degree_ok = static_cast<double>(trace.min_degree_h) >= trace.min_degree_target;
  trace.triangles_h = triangle_census(trace.h).count;
  return trace;
}

ChainCheck check_chain(const Graph& gamma, const ConstructionTrace& trace, const Graph& f) {
  ChainCheck check;
  const auto& halves = trace.layout.halves;
  check.monotone = trace.h.is_subgraph_of(trace.g3) && trace.g3.is_subgraph_of(trace.g2) &&
                   trace.g2.is_subgraph_of(trace.g1) && trace.g1.is_subgraph_of(gamma);
  check.a_independent = true;
  for (const Graph* g : {&trace.g1, &trace.g2, &trace.g3, &trace.h})
    check.a_independent = check.a_independent && edges_within(*g, halves.a) == 0;
  check.a_degrees_preserved = true;
  halves.a.for_each([&](Vertex a) {
    const auto d1 = degree_in(trace.g1, a, halves.b);
    if (degree_in(trace.g2, a, halves.b) != d1 || degree_in(trace.g3, a, halves.b) != d1)
      check.a_degrees_preserved = false;
  });
  check.b_edges_respect_gadget = true;
  trace.h.for_each_edge([&](Vertex u, Vertex v) {
    const int pu = trace.layout.part_of[u], pv = trace.layout.part_of[v];
    if (pu >= 0 && pv >= 0 && (pu == pv || !f.has_edge(static_cast<Vertex>(pu), static_cast<Vertex>(pv))))
      check.b_edges_respect_gadget = false;
  });
  return check;
}

}  // namespace trifree
