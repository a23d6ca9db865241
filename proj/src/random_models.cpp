#include "trifree/random_models.hpp"

#include <cmath>

namespace trifree {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::mt19937_64 make_rng(Seed seed, std::uint64_t stream) {
  const std::uint64_t h = mix64(mix64(mix64(seed.value) ^ seed.trial) ^ stream);
  std::seed_seq seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(seed.trial)};
  return std::mt19937_64(seq);
}

GnppLayout GnppLayout::for_order(std::size_t n) {
  GnppLayout layout;
  layout.n = n;
  const auto half = static_cast<Vertex>(n / 2);
  layout.b = VertexSet::range(n, 0, half);
  layout.a = VertexSet::range(n, half, static_cast<Vertex>(n));
  return layout;
}

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError(std::string(name) + " must lie in [0, 1]");
}

/// Visits each index in [0, total) independently with probability p, using
/// Geom(p) gaps between successive hits.
template <class Rng, class Visit>
void skip_sample(std::uint64_t total, double p, Rng& rng, Visit&& visit) {
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) visit(i);
    return;
  }
  std::geometric_distribution<std::uint64_t> gap(p);
  std::uint64_t i = gap(rng);
  while (i < total) {
    visit(i);
    const std::uint64_t g = gap(rng);
    if (g >= total - i) break;
    i += g + 1;
  }
}

/// Samples pairs u < v inside [offset, offset + k) with probability p.
template <class Rng>
void sample_clique_pairs(GraphBuilder& b, Vertex offset, std::size_t k, double p, Rng& rng) {
  if (k < 2) return;
  const std::uint64_t total = static_cast<std::uint64_t>(k) * (k - 1) / 2;
  // Cursor (u, v) tracks the pair with linear index `pos`; row u holds k-u-1 pairs.
  std::uint64_t pos = 0;
  std::uint64_t u = 0, v = 1;
  skip_sample(total, p, rng, [&](std::uint64_t idx) {
    std::uint64_t advance = idx - pos;
    pos = idx;
    while (advance > 0) {
      const std::uint64_t left_in_row = k - 1 - v;
      if (advance <= left_in_row) {
        v += advance;
        advance = 0;
      } else {
        advance -= left_in_row + 1;
        ++u;
        v = u + 1;
      }
    }
    b.add_edge(offset + static_cast<Vertex>(u), offset + static_cast<Vertex>(v));
  });
}

}  // namespace

Graph sample_gnp(std::size_t n, double p, Seed seed) {
  check_probability(p, "p");
  require(n >= 1, "sample_gnp needs n >= 1");
  auto rng = make_rng(seed, streams::kGnp);
  GraphBuilder b(n);
  sample_clique_pairs(b, 0, n, p, rng);
  return std::move(b).build();
}

GnppSample sample_gnpp(std::size_t n, double p, double pprime, Seed seed) {
  check_probability(p, "p");
  check_probability(pprime, "pprime");
  require(n >= 1, "sample_gnpp needs n >= 1");
  auto layout = GnppLayout::for_order(n);
  auto rng = make_rng(seed, streams::kGnpp);
  GraphBuilder b(n);
  const std::size_t nb = layout.b.size(), na = layout.a.size();
  sample_clique_pairs(b, 0, nb, p * pprime, rng);
  skip_sample(static_cast<std::uint64_t>(nb) * na, p, rng, [&](std::uint64_t idx) {
    b.add_edge(static_cast<Vertex>(idx / na), static_cast<Vertex>(nb + idx % na));
  });
  return {std::move(b).build(), std::move(layout)};
}

double chernoff_tail(double mean, double delta) {
  require(mean > 0.0, "chernoff_tail needs a positive mean");
  require(delta > 0.0 && delta < 1.5, "chernoff_tail needs 0 < delta < 3/2");
  return std::exp(-delta * delta * mean / 3.0);
}

}  // namespace trifree
