#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "trifree/diagnostics.hpp"

namespace trifree {
namespace {

bool within(double value, double centre, double eps) {
  return value >= (1.0 - eps) * centre && value <= (1.0 + eps) * centre;
}

std::size_t atypical_vertex_count(const Graph& gamma, const VertexSet& a, double eps, double p) {
  const double centre = p * static_cast<double>(a.size());
  std::size_t count = 0;
  for (Vertex v = 0; v < gamma.n(); ++v)
    if (!within(static_cast<double>(degree_in(gamma, v, a)), centre, eps)) ++count;
  return count;
}

}  // namespace

PropertyReport check_basics(const Graph& gamma, const BasicsInputs& in) {
  require(in.eps > 0 && in.eps < 1.5, "check_basics: eps must lie in (0, 3/2)");
  require(in.big_m >= 1, "check_basics: M must be positive");
  require(in.p > 0 && in.p <= 1, "check_basics: p must lie in (0, 1]");
  const std::size_t n = gamma.n();
  require(n >= 2, "check_basics: graph needs at least two vertices");
  if (in.a) require(in.a->universe() == n, "check_basics: set A has the wrong universe");
  if (in.b) require(in.b->universe() == n, "check_basics: set B has the wrong universe");

  const double nd = static_cast<double>(n), p = in.p, eps = in.eps, m = static_cast<double>(in.big_m);
  const std::size_t big = static_cast<std::size_t>(std::ceil(nd / m));

  PropertyReport report;
  report.lemma = "basics";
  report.samples = in.samples;
  report.seed = in.seed.value;
  auto rng = make_rng(in.seed, streams::kSampling);
  const auto everything = VertexSet::full(n);

  // (a)
  double worst = 0;
  for (Vertex v = 0; v < n; ++v)
    worst = std::max(worst, std::abs(static_cast<double>(gamma.degree(v)) - p * nd));
  report.add("a", "max |deg(v) - pn| vs eps p n", worst, Relation::kLessEq, eps * p * nd);

  // (b) sizes drawn log-uniformly from [1, n].
  std::vector<VertexSet> given;
  if (in.a) given.push_back(*in.a);
  if (in.b) given.push_back(*in.b);
  double excess = -std::numeric_limits<double>::infinity();
  auto probe_b = [&](const VertexSet& s) {
    const double size = static_cast<double>(s.size());
    excess = std::max(excess, static_cast<double>(edges_within(gamma, s)) - std::max(size * size * p, 9.0 * nd));
  };
  for (const auto& s : given) probe_b(s);
  std::uniform_real_distribution<double> log_size(0.0, std::log(nd));
  for (std::size_t i = 0; i < in.samples; ++i) {
    auto k = static_cast<std::size_t>(std::llround(std::exp(log_size(rng))));
    probe_b(random_subset(everything, std::clamp<std::size_t>(k, 1, n), rng));
  }
  report.add("b", "max over sets of e(A) - max(|A|^2 p, 9n)", excess, Relation::kLessEq, 0.0,
             in.samples);

  // (c) pairs with both sides at least n/M; relative deviation from p|A||B|.
  double deviation = 0;
  std::size_t pairs = 0;
  auto probe_c = [&](const VertexSet& a, const VertexSet& b) {
    const double expected = p * static_cast<double>(a.size()) * static_cast<double>(b.size());
    deviation = std::max(deviation, std::abs(static_cast<double>(edges_between(gamma, a, b)) / expected - 1.0));
    ++pairs;
  };
  if (in.a && in.b && in.a->disjoint(*in.b) && in.a->size() >= big && in.b->size() >= big) probe_c(*in.a, *in.b);
  if (2 * big <= n) {
    std::uniform_int_distribution<std::size_t> pair_size(big, n / 2);
    for (std::size_t i = 0; i < in.samples; ++i) {
      const auto a = random_subset(everything, pair_size(rng), rng);
      const auto b = random_subset(everything - a, pair_size(rng), rng);
      probe_c(a, b);
    }
  }
  if (pairs > 0)
    report.add("c", "max |e(A,B)/(p|A||B|) - 1| over disjoint A, B of size >= n/M", deviation, Relation::kLessEq,
               eps, in.samples);
  else
    report.notes.push_back("clause c skipped: two disjoint sets of size n/M do not fit");

  // (c, small side) |A| < n/M against the complement, the largest possible B.
  if (big > 1) {
    double ratio = 0;
    const double cap = (1.0 + eps) * p * nd * nd / m;
    std::uniform_int_distribution<std::size_t> small_size(1, big - 1);
    for (std::size_t i = 0; i < in.samples; ++i) {
      const auto a = random_subset(everything, small_size(rng), rng);
      ratio = std::max(ratio, static_cast<double>(edges_between(gamma, a, everything - a)) / cap);
    }
    report.add("c_small", "max e(A, V-A) / ((1+eps) p n^2 / M) over |A| < n/M", ratio, Relation::kLessEq, 1.0,
               in.samples);
  }

  // (d)
  double most = 0;
  auto probe_d = [&](const VertexSet& a) {
    most = std::max(most, static_cast<double>(atypical_vertex_count(gamma, a, eps, p)));
  };
  for (const auto& s : given)
    if (s.size() >= big) probe_d(s);
  std::uniform_int_distribution<std::size_t> d_size(std::min(big, n), n);
  for (std::size_t i = 0; i < in.samples; ++i) probe_d(random_subset(everything, d_size(rng), rng));
  report.add("d", "max over |A| >= n/M of #{v : deg(v,A) != (1 +- eps) p|A|} vs 10 M eps^-2 p^-1", most,
             Relation::kLessEq, 10.0 * m / (eps * eps * p), in.samples);
  return report;
}

AtypicalEdges atypical_edges(const Graph& gamma, const VertexSet& a, const VertexSet& b, double eps, double p,
                             std::size_t big_m) {
  const std::size_t n = gamma.n();
  require(a.universe() == n && b.universe() == n, "atypical_edges: sets have the wrong universe");
  require(a.disjoint(b), "atypical_edges: A and B must be disjoint");
  require(big_m >= 1, "atypical_edges: M must be positive");
  const double nd = static_cast<double>(n), m = static_cast<double>(big_m);
  require(static_cast<double>(a.size()) >= nd / m && static_cast<double>(b.size()) >= nd / m,
          "atypical_edges: A and B need at least n/M vertices");
  require(eps > 0 && p > 0, "atypical_edges: eps and p must be positive");

  const double pa = p * static_cast<double>(a.size()), pb = p * static_cast<double>(b.size());
  std::vector<char> typical(n);
  for (Vertex v = 0; v < n; ++v)
    typical[v] = within(static_cast<double>(degree_in(gamma, v, a)), pa, eps) &&
                 within(static_cast<double>(degree_in(gamma, v, b)), pb, eps);

  AtypicalEdges out;
  out.threshold = 1e3 * m / (eps * eps * p) * nd;
  const double common = (1.0 - eps) * p * pb;
  gamma.for_each_edge([&](Vertex u, Vertex v) {
    if (!typical[u] || !typical[v] ||
        static_cast<double>(bits::popcount_and(gamma.row(u), gamma.row(v), b.words())) < common)
      out.edges.emplace_back(u, v);
  });
  return out;
}

PropertyReport check_atypical(const Graph& gamma, const VertexSet& a, const VertexSet& b, double eps, double p,
                              std::size_t big_m) {
  const auto found = atypical_edges(gamma, a, b, eps, p, big_m);
  PropertyReport report;
  report.lemma = "atypical";
  report.add("count", "edges failing a degree or common-degree condition vs 10^3 M eps^-2 p^-1 n",
             static_cast<double>(found.edges.size()), Relation::kLessEq, found.threshold);
  return report;
}

}  // namespace trifree
