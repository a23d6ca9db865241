#include <algorithm>
#include <cmath>
#include <limits>

#include "trifree/diagnostics.hpp"

namespace trifree {

PropertyReport check_g1nice(const Graph& g1, const GnppLayout& layout, const ConstructionParams& params,
                            double eps, std::size_t samples, Seed seed) {
  require(g1.n() == layout.n && layout.a.universe() == g1.n(), "check_g1nice: layout does not match graph");
  require(edges_within(g1, layout.a) == 0, "check_g1nice: A is not independent");
  const auto& a_set = layout.a;
  const auto& b_set = layout.b;
  const double n = static_cast<double>(g1.n());
  const double p = params.p, pp = params.pprime, c = params.c;

  PropertyReport report;
  report.lemma = "g1nice";
  report.samples = samples;
  report.seed = seed.value;

  // (a) deg(b, A), deg(a, B) = (1/2 ± eps) p n.
  double worst = 0;
  a_set.for_each([&](Vertex a) {
    worst = std::max(worst, std::abs(static_cast<double>(degree_in(g1, a, b_set)) - 0.5 * p * n));
  });
  b_set.for_each([&](Vertex b) {
    worst = std::max(worst, std::abs(static_cast<double>(degree_in(g1, b, a_set)) - 0.5 * p * n));
  });
  report.add("a", "max |deg across the halves - pn/2| vs eps p n", worst, Relation::kLessEq, eps * p * n);

  // (b) e(N(a, B)) <= p' p^3 n^2 for every a.
  double most = 0;
  a_set.for_each([&](Vertex a) {
    most = std::max(most, static_cast<double>(edges_within(g1, g1.neighbors(a) & b_set)));
  });
  report.add("b", "max over a in A of e(N(a,B)) vs p' p^3 n^2", most, Relation::kLessEq, pp * p * p * p * n * n);

  // (c) for b with deg(b, B) >= p' p n / 10: #{a : abb' triangle} <= pn(1 - (1-p)^deg(b,B)).
  std::size_t violations = 0, examined = 0;
  b_set.for_each([&](Vertex b) {
    const auto deg_b = degree_in(g1, b, b_set);
    if (static_cast<double>(deg_b) < pp * p * n / 10.0) return;
    ++examined;
    std::size_t hit = 0;
    const auto b_row = g1.row(b);
    bits::for_each_bit(g1.row(b), [&](Vertex a) {
      if (layout.in_a(a) && bits::intersects(b_row, g1.row(a), b_set.words())) ++hit;
    });
    const double bound = p * n * (1.0 - std::pow(1.0 - p, static_cast<double>(deg_b)));
    if (!(static_cast<double>(hit) <= bound)) ++violations;
  });
  report.add("c", "vertices b (deg(b,B) >= p'pn/10) with more triangle partners in A than pn(1-(1-p)^deg(b,B))",
             static_cast<double>(violations), Relation::kLessEq, 0.0);
  report.notes.push_back("clause c examined " + std::to_string(examined) + " vertices of B");

  // (d) edges in B at vertices with deg(b, B) >= p p' n or <= p p' n / 10.
  std::vector<char> extreme(g1.n(), 0);
  b_set.for_each([&](Vertex b) {
    const auto d = static_cast<double>(degree_in(g1, b, b_set));
    extreme[b] = d >= p * pp * n || d <= p * pp * n / 10.0;
  });
  std::size_t touching = 0;
  g1.for_each_edge([&](Vertex u, Vertex v) {
    if (layout.in_b(u) && layout.in_b(v) && (extreme[u] || extreme[v])) ++touching;
  });
  report.add("d", "B-edges at vertices with extreme B-degree vs c p^-1 n", static_cast<double>(touching),
             Relation::kLessEq, c / p * n);

  // (e) e(U, V) > 2 c p^-1 n for disjoint U, V ⊆ B with |U|, |V| >= 2n/K (sampled at the minimum size).
  const auto size = static_cast<std::size_t>(std::ceil(2.0 * n / params.big_k));
  if (samples > 0 && 2 * size <= b_set.size()) {
    auto rng = make_rng(seed, streams::kSampling);
    double least = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
      const auto u = random_subset(b_set, size, rng);
      const auto v = random_subset(b_set - u, size, rng);
      least = std::min(least, static_cast<double>(edges_between(g1, u, v)));
    }
    report.add("e", "min sampled e(U,V) over |U|=|V|=ceil(2n/K) in B vs 2 c p^-1 n", least, Relation::kGreater,
               2.0 * c / p * n, samples);
  } else {
    report.notes.push_back("clause e skipped: no samples requested or B too small for two sets of size 2n/K");
  }
  return report;
}

}  // namespace trifree
