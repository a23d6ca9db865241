#pragma once

#include <cstdint>
#include <random>

#include "trifree/graph.hpp"

namespace trifree {

/// Root seed plus a trial index; (value, trial) fixes every random draw.
struct Seed {
  std::uint64_t value = 0;
  std::uint64_t trial = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Independent generator for a (seed, trial, stream) triple. Streams separate
/// the different consumers of one seed (sampler, sparsifier, heuristics...).
std::mt19937_64 make_rng(Seed seed, std::uint64_t stream = 0);

namespace streams {
inline constexpr std::uint64_t kGnp = 0x676e70;
inline constexpr std::uint64_t kGnpp = 0x676e7070;
inline constexpr std::uint64_t kSparsify = 0x73707273;
inline constexpr std::uint64_t kLocalSearch = 0x6c6f63;
inline constexpr std::uint64_t kSampling = 0x736d706c;
}  // namespace streams

/// B = {0..floor(n/2)-1}, A = the rest.
struct GnppLayout {
  std::size_t n = 0;
  VertexSet a;
  VertexSet b;

  static GnppLayout for_order(std::size_t n);
  bool in_a(Vertex v) const { return v >= b.size(); }
  bool in_b(Vertex v) const { return v < b.size(); }
};

/// Erdős–Rényi G(n, p) by geometric skipping over the linearised pair index.
Graph sample_gnp(std::size_t n, double p, Seed seed);

struct GnppSample {
  Graph graph;
  GnppLayout layout;
};

/// G(n, p, p'): pairs inside B w.p. p p', pairs inside A never, A-B pairs w.p. p.
GnppSample sample_gnpp(std::size_t n, double p, double pprime, Seed seed);

/// exp(-delta^2 mean / 3), the two-sided binomial tail bound for 0 < delta < 3/2.
double chernoff_tail(double mean, double delta);

}  // namespace trifree
