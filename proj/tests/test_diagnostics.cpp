#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "trifree/diagnostics.hpp"
#include "trifree/errors.hpp"

using namespace trifree;

namespace {

bool within(double value, double centre, double eps) {
  return value >= (1 - eps) * centre && value <= (1 + eps) * centre;
}

Graph complete_bipartite(std::size_t n, const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                         std::vector<Edge> extra = {}) {
  for (auto u : left)
    for (auto v : right) extra.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(n, extra);
}

}  // namespace

// Reports ---------------------------------------------------------------------

TEST(Report, RelationsAndJson) {
  EXPECT_TRUE(holds(1, Relation::kLessEq, 1));
  EXPECT_FALSE(holds(1, Relation::kLess, 1));
  EXPECT_TRUE(holds(2, Relation::kGreater, 1));
  EXPECT_TRUE(holds(1, Relation::kGreaterEq, 1));
  PropertyReport report;
  report.lemma = "demo";
  report.add("a", "x", 1, Relation::kLessEq, 2);
  EXPECT_TRUE(report.pass());
  report.add("b", "y", 3, Relation::kLess, 2, 7);
  EXPECT_FALSE(report.pass());
  ASSERT_NE(report.find("b"), nullptr);
  EXPECT_EQ(report.find("b")->sampled, 7u);
  EXPECT_EQ(report.find("zzz"), nullptr);
  const auto text = report_json(report);
  EXPECT_NE(text.find("\"demo\""), std::string::npos);
  EXPECT_NE(text.find("\"pass\": false"), std::string::npos);
}

TEST(RandomSubset, SizeAndMembership) {
  std::mt19937_64 rng(1);
  const auto from = VertexSet::of(100, {3, 9, 10, 50, 60, 99});
  for (std::size_t k = 0; k <= 6; ++k) {
    const auto s = random_subset(from, k, rng);
    EXPECT_EQ(s.size(), k);
    EXPECT_TRUE(s.subset_of(from));
  }
  EXPECT_THROW(random_subset(from, 7, rng), ArgumentError);
}

// G(n,p,p') properties ----------------------------------------------------------

TEST(G1Nice, ZeroPprimeClauseB) {
  auto params = derive_params(0.2, 2, 400, 0.3, kDefaultC, {1, 0});
  params.pprime = 0;
  const auto sample = sample_gnpp(400, 0.3, 0.0, {1, 0});
  const auto report = check_g1nice(sample.graph, sample.layout, params, 0.2, 5, {1, 0});
  const auto* b = report.find("b");
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->measured, 0.0);
  EXPECT_EQ(b->threshold, 0.0);
  EXPECT_TRUE(b->pass);
}

TEST(G1Nice, PlantedHubCountedInClauseD) {
  // n = 40, p = p' = 0.5: pp'n = 10, hub of degree 11 in B.
  ConstructionParams params;
  params.n = 40;
  params.p = 0.5;
  params.pprime = 0.5;
  params.c = 1e-3;
  params.big_k = 80;
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= 11; ++v) edges.emplace_back(0, v);
  const Graph g1(40, edges);
  const auto layout = GnppLayout::for_order(40);
  const auto report = check_g1nice(g1, layout, params, 0.2, 0, {1, 0});
  EXPECT_EQ(report.find("d")->measured, 11.0);
  EXPECT_EQ(report.find("e"), nullptr);
}

TEST(G1Nice, RejectsLayoutMismatch) {
  const auto params = derive_params(0.2, 2, 400, 0.3, kDefaultC, {1, 0});
  const auto layout = GnppLayout::for_order(400);
  EXPECT_THROW(check_g1nice(Graph::empty(300), layout, params, 0.2, 1, {1, 0}), ArgumentError);
  EXPECT_THROW(check_g1nice(Graph(400, {{300, 301}}), layout, params, 0.2, 1, {1, 0}), ArgumentError);
}

// At n = 4000, p = 0.1, c = 10^-3, K = 80: p' = 0.16. Degrees across the
// halves have sd about 13.4 around 200, so clause (a) needs eps near 0.2.
TEST(G1Nice, TypicalSamplesPass) {
  const std::size_t n = 4000;
  const double p = 0.1;
  int passed = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto params = derive_params(0.2, 2, n, p, kDefaultC, {s, 0});
    const auto sample = sample_gnpp(n, p, params.pprime, {s, 0});
    const auto report = check_g1nice(sample.graph, sample.layout, params, 0.2, 20, {s, 0});
    ASSERT_EQ(report.clauses.size(), 5u);
    passed += report.pass();
  }
  EXPECT_GE(passed, 19);
}

// G(n,p) properties ---------------------------------------------------------------

TEST(Basics, CompleteGraph) {
  BasicsInputs in;
  in.eps = 0.1;
  in.p = 1.0;
  in.samples = 5;
  const auto report = check_basics(Graph::complete(11), in);
  EXPECT_EQ(report.find("a")->measured, 1.0);
  EXPECT_TRUE(report.find("a")->pass);
  EXPECT_FALSE(check_basics(Graph::complete(9), in).find("a")->pass);
}

TEST(Basics, EmptyGraphClauseB) {
  BasicsInputs in;
  in.p = 0.1;
  in.samples = 10;
  in.a = VertexSet::range(50, 0, 30);
  const auto report = check_basics(Graph::empty(50), in);
  EXPECT_TRUE(report.find("b")->pass);
  EXPECT_FALSE(report.find("a")->pass);
}

TEST(Basics, ClausesOnSample) {
  const std::size_t n = 4000;
  const double p = 0.05;
  const auto g = sample_gnp(n, p, {2, 0});
  BasicsInputs in;
  in.eps = 0.2;
  in.big_m = 10;
  in.p = p;
  in.samples = 20;
  in.seed = {2, 0};
  in.a = VertexSet::range(n, 0, 1000);
  in.b = VertexSet::range(n, 1000, 2000);
  const auto report = check_basics(g, in);
  double worst = 0;
  for (Vertex v = 0; v < n; ++v) worst = std::max(worst, std::abs(static_cast<double>(g.degree(v)) - p * n));
  EXPECT_EQ(report.find("a")->measured, worst);
  for (const char* clause : {"b", "c", "c_small", "d"}) {
    ASSERT_NE(report.find(clause), nullptr) << clause;
    EXPECT_TRUE(report.find(clause)->pass) << clause;
    EXPECT_EQ(report.find(clause)->sampled, 20u);
  }
  EXPECT_THROW(check_basics(g, BasicsInputs{1.6, 10, p}), ArgumentError);
}

TEST(Atypical, CompleteAndEmpty) {
  const auto halves = GnppLayout::for_order(16);
  EXPECT_TRUE(atypical_edges(Graph::complete(16), halves.a, halves.b, 0.5, 1.0, 2).edges.empty());
  const auto none = atypical_edges(Graph::empty(16), halves.a, halves.b, 0.5, 0.5, 2);
  EXPECT_TRUE(none.edges.empty());
  EXPECT_TRUE(none.within_bound());
  EXPECT_THROW(atypical_edges(Graph::empty(16), VertexSet::of(16, {0}), halves.a, 0.5, 0.5, 2), ArgumentError);
  EXPECT_THROW(atypical_edges(Graph::empty(16), halves.a, halves.a, 0.5, 0.5, 2), ArgumentError);
}

TEST(Atypical, AgreesWithNaivePass) {
  const std::size_t n = 300;
  const double p = 0.1, eps = 0.3;
  const auto g = sample_gnp(n, p, {12, 0});
  const auto halves = GnppLayout::for_order(n);
  const auto& a = halves.a;
  const auto& b = halves.b;
  const auto found = atypical_edges(g, a, b, eps, p, 2);

  auto count_in = [&](Vertex v, const VertexSet& s) {
    std::size_t k = 0;
    for (Vertex w = 0; w < n; ++w) k += s.contains(w) && g.has_edge(v, w);
    return k;
  };
  std::vector<Edge> naive;
  for (const auto& [u, v] : g.edges()) {
    const double pa = p * a.size(), pb = p * b.size();
    const bool deg_a = within(count_in(u, a), pa, eps) && within(count_in(v, a), pa, eps);
    const bool deg_b = within(count_in(u, b), pb, eps) && within(count_in(v, b), pb, eps);
    std::size_t common = 0;
    for (Vertex w = 0; w < n; ++w) common += b.contains(w) && g.has_edge(u, w) && g.has_edge(v, w);
    const bool codeg = static_cast<double>(common) >= (1 - eps) * p * p * b.size();
    if (!deg_a || !deg_b || !codeg) naive.emplace_back(u, v);
  }
  EXPECT_EQ(found.edges, naive);
  EXPECT_FALSE(naive.empty());
  EXPECT_DOUBLE_EQ(found.threshold, 1e3 * 2 / (eps * eps * p) * n);
}

// Bad stars ---------------------------------------------------------------------

TEST(Witness, CanonicalWitness) {
  const auto g = sample_gnp(60, 0.3, {4, 0});
  const auto a = VertexSet::range(60, 30, 60);
  EXPECT_TRUE(canonical_witness(g, g, 3, a).empty());
  std::vector<Edge> cut;
  g.for_each_neighbor(3, [&](Vertex w) {
    if (a.contains(w)) cut.emplace_back(3, w);
  });
  EXPECT_EQ(canonical_witness(g, g.remove_edges(cut), 3, a), g.neighbors(3) & a);
}

TEST(Witness, ReplaysStageH) {
  const std::size_t n = 600;
  const auto params = derive_params(0.2, 2, n, 0.15, kDefaultC, {5, 0});
  const auto trace = construct(sample_gnp(n, 0.15, {5, 0}), params);
  const auto& halves = trace.layout.halves;
  for (Vertex x = 300; x < 600; x += 37) {
    VertexSet purged(n);
    halves.b.for_each([&](Vertex b) {
      if (trace.g3.has_edge(x, b) && !trace.h.has_edge(x, b)) purged.insert(b);
    });
    EXPECT_EQ(canonical_witness(trace.g3, trace.h, x, halves.b), purged);
  }
}

namespace {

// x = 0, A = {20..35}, S = {20..23}, leaves 1..3 joined to x and to all of S.
// p = q = eps = 0.5 (exact in binary): |S| cap qp|A| = 4, leaf threshold (1+eps)qp^2|A| = 3.
Graph star_host(std::size_t leaf_links) {
  std::vector<Edge> edges;
  for (Vertex s = 20; s < 24; ++s) edges.emplace_back(0, s);
  for (Vertex y = 1; y <= 3; ++y) {
    edges.emplace_back(0, y);
    for (Vertex s = 20; s < 20 + (y == 3 ? leaf_links : 4); ++s) edges.emplace_back(y, s);
  }
  return Graph(40, edges);
}

StarCertificate star_cert(std::size_t n) {
  return {0, VertexSet::of(n, {1, 2, 3}), VertexSet::range(n, 20, 36), 0.5, 0.5, VertexSet::of(n, {20, 21, 22, 23})};
}

}  // namespace

TEST(BadStar, WitnessChecks) {
  EXPECT_TRUE(is_bad_star(star_host(4), star_cert(40), 0.5));
  EXPECT_TRUE(is_bad_star(star_host(3), star_cert(40), 0.5));
  EXPECT_FALSE(is_bad_star(star_host(2), star_cert(40), 0.5));

  auto empty = star_cert(40);
  empty.witness = VertexSet(40);
  EXPECT_FALSE(is_bad_star(star_host(4), empty, 0.5));

  auto oversized = star_cert(40);
  EXPECT_FALSE(is_bad_star(star_host(4), oversized, 0.3));  // cap 0.5 * 0.3 * 16 = 2.4 < 4

  auto stray_leaf = star_cert(40);
  stray_leaf.leaves.insert(5);
  EXPECT_THROW(is_bad_star(star_host(4), stray_leaf, 0.5), ArgumentError);
  auto stray_witness = star_cert(40);
  stray_witness.witness.insert(30);  // not adjacent to x
  EXPECT_THROW(is_bad_star(star_host(4), stray_witness, 0.5), ArgumentError);
}

TEST(BadStar, MonotoneInWitness) {
  const auto g = sample_gnp(200, 0.3, {8, 0});
  const auto a = VertexSet::range(200, 100, 200);
  std::mt19937_64 rng(3);
  for (Vertex x = 0; x < 40; ++x) {
    const auto nx = g.neighbors(x) & a;
    const auto cap = static_cast<std::size_t>(0.5 * 0.3 * 100);
    if (nx.size() < 2) continue;
    const auto big = random_subset(nx, std::min(cap, nx.size()), rng);
    const auto small = random_subset(big, big.size() / 2, rng);
    const auto leaves = g.neighbors(x) - a;
    const StarCertificate s_small{x, leaves, a, 0.5, 0.1, small}, s_big{x, leaves, a, 0.5, 0.1, big};
    if (is_bad_star(g, s_small, 0.3)) EXPECT_TRUE(is_bad_star(g, s_big, 0.3));
  }
}

TEST(BadStar, Packing) {
  const auto host = star_host(4);
  const auto a = VertexSet::range(40, 20, 36);
  EXPECT_EQ(count_disjoint_bad_stars(host, host, a, 0.5, 0.5, 3, 0.5).count(), 0u);

  std::vector<Edge> cut;
  for (Vertex s = 20; s < 24; ++s) cut.emplace_back(0, s);
  const auto h = host.remove_edges(cut);
  const auto packing = count_disjoint_bad_stars(host, h, a, 0.5, 0.5, 3, 0.5);
  ASSERT_EQ(packing.count(), 1u);
  EXPECT_EQ(packing.stars[0].center, 0u);
  EXPECT_EQ(packing.stars[0].leaves.to_vector(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(is_bad_star(host, packing.stars[0], 0.5));
  EXPECT_DOUBLE_EQ(packing.bound, 1.0);
  EXPECT_FALSE(packing.below_bound());
  EXPECT_FALSE(packing.s_in_regime);
  EXPECT_TRUE(packing.ambient_large);  // 3 * 16 >= 40
  EXPECT_FALSE(packing.q_in_range);  // needs eps < q
}

// Max-cut gadgets ----------------------------------------------------------------

TEST(Tilde, Examples) {
  const auto x = VertexSet::of(6, {0, 1, 2});
  const Graph independent(6, {{0, 3}, {1, 4}});
  EXPECT_TRUE(tilde_set(independent, x, 0.1).empty());
  const Graph g(6, {{0, 1}, {1, 3}, {2, 4}});
  EXPECT_EQ(tilde_set(g, x, 0.0).to_vector(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(tilde_set(g, x, 0.5).to_vector(), (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(tilde_set(Graph::complete(4), VertexSet::of(4, {0, 1}), 0.5).empty());
}

TEST(Orient, NothingDeleted) {
  const auto gamma = Graph::complete(6);
  const auto x = VertexSet::of(6, {0, 1, 2}), y = VertexSet::of(6, {3, 4, 5});
  const auto o = orient_edges(gamma, gamma, x, y, VertexSet(6));
  EXPECT_EQ(o.arcs, (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(o.in_degrees(), (std::vector<std::size_t>{0, 1, 2, 0, 0, 0}));
}

TEST(Orient, AllDeletedPointsToCandidate) {
  const auto gamma = Graph::complete(6);
  const auto x = VertexSet::of(6, {0, 1, 2}), y = VertexSet::of(6, {3, 4, 5});
  const auto hp = gamma.filter_edges([&](Vertex u, Vertex v) { return x.contains(u) && x.contains(v); });
  const auto o = orient_edges(gamma, hp, x, y, VertexSet(6));
  EXPECT_EQ(o.arcs, (std::vector<Edge>{{1, 0}, {2, 0}, {2, 1}}));
  // With 2 in X-tilde the edges at 2 take 2 as the candidate head.
  const auto biased = orient_edges(gamma, hp, x, y, VertexSet::of(6, {2}));
  EXPECT_EQ(biased.arcs, (std::vector<Edge>{{1, 0}, {0, 2}, {1, 2}}));
}

TEST(Orient, NoCommonNeighboursPointsToCandidate) {
  const Graph gamma(5, {{0, 1}, {1, 2}});
  const auto o = orient_edges(gamma, gamma, VertexSet::of(5, {0, 1, 2}), VertexSet::of(5, {3, 4}), VertexSet(5));
  EXPECT_EQ(o.arcs, (std::vector<Edge>{{1, 0}, {2, 1}}));
}

// X = {0..5}, Y = {6..11}. Gamma: path 0-1-2-3-4-5 in X; 0,1 share Y-neighbours
// 6,7,8; 1,2 share 9; 2,3 share 6,7,8 of which H' drops 2-6, 2-7 from 2 (two of three);
// 3,4 share 10, 11 and H' drops 4-10 (1 of 2 from 4 when 4 is the candidate).
TEST(Orient, HandComputedInstance) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  for (Vertex w : {6, 7, 8}) {
    e.emplace_back(0, w);
    e.emplace_back(1, w);
    e.emplace_back(2, w);
    e.emplace_back(3, w);
  }
  e.emplace_back(1, 9);
  e.emplace_back(2, 9);
  for (Vertex w : {10, 11}) {
    e.emplace_back(3, w);
    e.emplace_back(4, w);
  }
  const Graph gamma(12, e);
  const auto hp = gamma.remove_edges(std::vector<Edge>{{2, 6}, {2, 7}, {4, 10}});
  const auto x = VertexSet::range(12, 0, 6), y = VertexSet::range(12, 6, 12);
  const auto tilde = VertexSet::of(12, {4});
  const auto o = orient_edges(gamma, hp, x, y, tilde);
  // 0-1: candidate 0, common {6,7,8}, deleted 0          -> toward 1.
  // 1-2: candidate 1, common {6,7,8,9}, deleted 0        -> toward 2.
  // 2-3: candidate 2, common {6,7,8}, deleted {6,7}: 6>=6 -> toward 2.
  // 3-4: candidate 4 (in tilde), common {10,11}, deleted {10}: 3 < 4 -> toward 3.
  // 4-5: candidate 4, no common neighbours               -> toward 4.
  EXPECT_EQ(o.arcs, (std::vector<Edge>{{0, 1}, {1, 2}, {3, 2}, {4, 3}, {5, 4}}));
  EXPECT_EQ(orient_edges(gamma, hp, x, y, tilde).arcs, o.arcs);
  EXPECT_THROW(orient_edges(gamma, hp, x, x, tilde), ArgumentError);
}

TEST(Orient, CountsEdgesOfHpInX) {
  const auto gamma = sample_gnp(120, 0.2, {6, 0});
  const auto hp = gamma.filter_edges([](Vertex u, Vertex v) { return (u + v) % 3 != 0; });
  const auto x = VertexSet::range(120, 0, 60), y = VertexSet::range(120, 60, 120);
  const auto tilde = tilde_set(hp, x, 0.5);
  const auto o = orient_edges(gamma, hp, x, y, tilde);
  EXPECT_EQ(o.arcs.size(), edges_within(hp, x));
  for (const auto& [t, h] : o.arcs) EXPECT_TRUE(hp.has_edge(t, h));
}

TEST(InStars, Examples) {
  Orientation toward_zero;
  toward_zero.n = 5;
  toward_zero.arcs = {{1, 0}, {2, 0}, {3, 0}, {4, 3}};
  const auto one = greedy_in_stars(toward_zero, 3, VertexSet(5));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].center, 0u);
  EXPECT_EQ(one[0].leaves, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(greedy_in_stars(toward_zero, 4, VertexSet(5)).empty());
  EXPECT_TRUE(greedy_in_stars(toward_zero, 3, VertexSet::of(5, {0})).empty());
  EXPECT_THROW(greedy_in_stars(toward_zero, 0, VertexSet(5)), ArgumentError);
}

TEST(InStars, MatchesReferenceGreedy) {
  const auto g = sample_gnp(500, 0.1, {10, 0});
  std::mt19937_64 rng(10);
  Orientation o;
  o.n = 500;
  g.for_each_edge([&](Vertex u, Vertex v) {
    if (rng() & 1u)
      o.arcs.emplace_back(u, v);
    else
      o.arcs.emplace_back(v, u);
  });
  VertexSet exclude(500);
  std::vector<bool> excluded(500, false);
  for (Vertex v = 0; v < 500; v += 7) {
    exclude.insert(v);
    excluded[v] = true;
  }
  const auto stars = greedy_in_stars(o, 10, exclude);
  const auto reference = oracle::in_stars(500, o.arcs, 10, excluded);
  ASSERT_EQ(stars.size(), reference.size());
  EXPECT_FALSE(stars.empty());
  std::vector<bool> used(500, false);
  const auto in = o.in_neighbors();
  for (std::size_t i = 0; i < stars.size(); ++i) {
    EXPECT_EQ(stars[i].center, reference[i].center);
    EXPECT_EQ(stars[i].leaves, reference[i].leaves);
    EXPECT_FALSE(used[stars[i].center]);
    used[stars[i].center] = true;
    for (auto leaf : stars[i].leaves) {
      EXPECT_FALSE(used[leaf]);
      used[leaf] = true;
      EXPECT_TRUE(std::binary_search(in[stars[i].center].begin(), in[stars[i].center].end(), leaf));
    }
  }
  // Maximality: no remaining centre keeps s unused in-neighbours.
  for (Vertex c = 0; c < 500; ++c) {
    if (used[c] || excluded[c]) continue;
    std::size_t free = 0;
    for (auto t : in[c]) free += !used[t];
    EXPECT_LT(free, 10u);
  }
}

// Partition classification ----------------------------------------------------------

TEST(Classify, EmptyGraph) {
  const std::vector<VertexSet> parts{VertexSet(20), VertexSet::range(20, 0, 10), VertexSet::range(20, 10, 20)};
  const auto cls = classify_partition(Graph::empty(20), parts, 0.1, 0.1, 0.5);
  EXPECT_TRUE(cls.w.empty());
  ASSERT_EQ(cls.classes.size(), 1u);
  EXPECT_EQ(cls.classes.at(0).size(), 20u);
}

TEST(Classify, SingleCluster) {
  // p = 1, d = 0.05, eps = 0.1: N_{1} needs more than 10 d p |V_1| = 5 neighbours in V_1 (|V_1| = 10).
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= 6; ++v) edges.emplace_back(0, v);
  const Graph h(10, edges);
  const std::vector<VertexSet> parts{VertexSet(10), VertexSet::full(10)};
  const auto cls = classify_partition(h, parts, 0.05, 0.1, 1.0);
  EXPECT_TRUE(cls.w.empty());
  EXPECT_EQ(cls.classes.at(1).to_vector(), (std::vector<Vertex>{0}));
  EXPECT_EQ(cls.classes.at(0).size(), 9u);
}

TEST(Classify, WMembership) {
  // V_0 = {0, 1}; vertex 2 has both V_0 vertices as neighbours: 2 > 2 eps p n = 2 * 0.1 * 0.5 * 12 = 1.2.
  const Graph h(12, {{0, 2}, {1, 2}, {3, 4}});
  const std::vector<VertexSet> parts{VertexSet::of(12, {0, 1}), VertexSet::range(12, 2, 7), VertexSet::range(12, 7, 12)};
  const auto cls = classify_partition(h, parts, 0.01, 0.1, 0.5);
  EXPECT_EQ(cls.w.to_vector(), (std::vector<Vertex>{2}));
}

TEST(Classify, RandomPartitionIsExact) {
  const auto g = sample_gnp(1000, 0.2, {14, 0});
  const auto h = g.filter_edges([](Vertex u, Vertex v) { return (u * 7 + v) % 5 != 0; });
  std::vector<VertexSet> parts{VertexSet::range(1000, 0, 40)};
  for (Vertex i = 0; i < 4; ++i) parts.push_back(VertexSet::range(1000, 40 + 240 * i, 40 + 240 * (i + 1)));
  const auto cls = classify_partition(h, parts, 0.02, 0.1, 0.2);
  VertexSet seen = cls.w;
  for (const auto& [mask, members] : cls.classes) {
    EXPECT_LT(mask, 16u);
    EXPECT_FALSE(members.empty());
    EXPECT_TRUE(seen.disjoint(members));
    seen |= members;
  }
  EXPECT_EQ(seen.size(), 1000u);
  const auto report = check_classification(h, parts, 0.02, 0.1, 0.2, 0.05);
  EXPECT_TRUE(report.find("partition")->pass);
  EXPECT_TRUE(report.find("disjoint")->pass);
}

TEST(Classify, RejectsNonPartition) {
  const std::vector<VertexSet> gap{VertexSet(10), VertexSet::range(10, 0, 5)};
  EXPECT_THROW(classify_partition(Graph::empty(10), gap, 0.1, 0.1, 0.5), ArgumentError);
  const std::vector<VertexSet> overlap{VertexSet::range(10, 0, 6), VertexSet::range(10, 4, 10)};
  EXPECT_THROW(classify_partition(Graph::empty(10), overlap, 0.1, 0.1, 0.5), ArgumentError);
}

TEST(Classify, SmallClassCheckAndReducedGraph) {
  const auto g = sample_gnp(300, 0.5, {15, 0});
  std::vector<VertexSet> parts{VertexSet(300)};
  for (Vertex i = 0; i < 3; ++i) parts.push_back(VertexSet::range(300, 100 * i, 100 * (i + 1)));
  const std::vector<Edge> reduced{{1, 2}};
  const auto report = check_classification(g, parts, 0.01, 0.3, 0.5, 0.05, &reduced);
  ASSERT_NE(report.find("small_classes"), nullptr);
  EXPECT_TRUE(report.find("small_classes")->pass);
  EXPECT_EQ(report.notes.size(), 2u);
}

// Regular pairs ---------------------------------------------------------------------

TEST(LowerRegular, TrivialCases) {
  const std::vector<Vertex> left{0, 1, 2, 3}, right{4, 5, 6, 7};
  const auto full = complete_bipartite(8, left, right);
  const auto x = VertexSet::from(8, left), y = VertexSet::from(8, right);
  for (double eps : {0.1, 0.5, 0.9}) EXPECT_TRUE(lower_regular_pair(full, x, y, eps, 0.5, 1.0, RegularityMode::kExhaustive));
  EXPECT_FALSE(lower_regular_pair(Graph::empty(8), x, y, 0.3, 0.5, 0.5, RegularityMode::kExhaustive));
  EXPECT_FALSE(lower_regular_pair(Graph::empty(8), x, y, 0.3, 0.5, 0.5, RegularityMode::kSampled, 5, {1, 0}));
  EXPECT_THROW(lower_regular_pair(Graph::empty(30), VertexSet::range(30, 0, 13), VertexSet::range(30, 13, 26), 0.3,
                                  0.5, 0.5, RegularityMode::kExhaustive),
               CapacityError);
}

TEST(LowerRegular, MatchesDoubleLoopOracle) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int t = 0; t < 300; ++t) {
    const std::size_t sx = size(rng), sy = size(rng);
    const auto g = oracle::random_graph(sx + sy, unit(rng), rng);
    std::vector<Vertex> xs, ys;
    for (Vertex v = 0; v < sx; ++v) xs.push_back(v);
    for (Vertex v = 0; v < sy; ++v) ys.push_back(static_cast<Vertex>(sx + v));
    const double eps = unit(rng), d = unit(rng);
    const bool expected = oracle::lower_regular(g, xs, ys, eps, d, 1.0);
    ASSERT_EQ(lower_regular_pair(g, VertexSet::from(g.n(), xs), VertexSet::from(g.n(), ys), eps, d, 1.0,
                                 RegularityMode::kExhaustive),
              expected)
        << "trial " << t;
  }
}

TEST(LowerRegular, SampledNeverRefutesRegularPairs) {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_graph(16, 0.7, rng);
    const auto x = VertexSet::range(16, 0, 8), y = VertexSet::range(16, 8, 16);
    if (lower_regular_pair(g, x, y, 0.4, 0.5, 1.0, RegularityMode::kExhaustive))
      EXPECT_TRUE(lower_regular_pair(g, x, y, 0.4, 0.5, 1.0, RegularityMode::kSampled, 50, {std::uint64_t(t), 0}));
  }
}

// A dense 12 x 12 pair: (0.3, 0.5, 1)-lower-regular, so every slice with at
// least 6 vertices per side is (0.6, 0.5, 1)-lower-regular.
TEST(LowerRegular, SlicingInstance) {
  std::mt19937_64 rng(5);
  const std::vector<Vertex> left{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 12; ++u)
    for (Vertex v = 12; v < 24; ++v)
      if (rng() % 10 < 9) edges.emplace_back(u, v);
  const Graph g(24, edges);
  const auto x = VertexSet::range(24, 0, 12), y = VertexSet::range(24, 12, 24);
  ASSERT_TRUE(lower_regular_pair(g, x, y, 0.3, 0.5, 1.0, RegularityMode::kExhaustive));
  const auto report = check_slicing(g, x, y, 0.3, 0.5, 1.0, 40, {5, 0});
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.find("slices")->measured, 0.0);
  for (int t = 0; t < 20; ++t) {
    const auto xs = random_subset(x, 6 + rng() % 7, rng), ys = random_subset(y, 6 + rng() % 7, rng);
    EXPECT_TRUE(oracle::lower_regular(g, xs.to_vector(), ys.to_vector(), 0.6, 0.5, 1.0));
  }
}
