#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "trifree/diagnostics.hpp"

namespace trifree {
namespace {

// Smallest k with k >= eps * size.
std::size_t min_size(double eps, std::size_t size) {
  auto k = static_cast<std::size_t>(std::max(0.0, std::ceil(eps * static_cast<double>(size))));
  while (k > 0 && static_cast<double>(k - 1) >= eps * static_cast<double>(size)) --k;
  while (static_cast<double>(k) < eps * static_cast<double>(size)) ++k;
  return std::max<std::size_t>(k, 1);
}

bool exhaustive(const Graph& h, const VertexSet& x, const VertexSet& y, double eps, double target) {
  const auto xs = x.to_vector(), ys = y.to_vector();
  if (xs.size() > kExhaustivePairCap || ys.size() > kExhaustivePairCap)
    throw CapacityError("lower_regular_pair: exhaustive mode needs |X|, |Y| <= " +
                        std::to_string(kExhaustivePairCap));
  const std::size_t kx = min_size(eps, xs.size()), ky = min_size(eps, ys.size());
  if (kx > xs.size() || ky > ys.size()) return true;

  std::vector<std::uint32_t> adj(ys.size(), 0);
  for (std::size_t j = 0; j < ys.size(); ++j)
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (h.has_edge(xs[i], ys[j])) adj[j] |= 1u << i;

  std::vector<std::size_t> deg(ys.size());
  for (std::uint32_t mask = 1; mask < (1u << xs.size()); ++mask) {
    const auto sx = static_cast<std::size_t>(std::popcount(mask));
    if (sx < kx) continue;
    for (std::size_t j = 0; j < ys.size(); ++j) deg[j] = static_cast<std::size_t>(std::popcount(adj[j] & mask));
    std::sort(deg.begin(), deg.end());
    // For a fixed size, the sparsest Y' takes the lowest degrees.
    std::size_t e = 0;
    for (std::size_t k = 1; k <= ys.size(); ++k) {
      e += deg[k - 1];
      if (k < ky) continue;
      if (static_cast<double>(e) / static_cast<double>(sx * k) < target) return false;
    }
  }
  return true;
}

bool sampled(const Graph& h, const VertexSet& x, const VertexSet& y, double eps, double target, std::size_t samples,
             Seed seed) {
  const std::size_t kx = min_size(eps, x.size()), ky = min_size(eps, y.size());
  if (kx > x.size() || ky > y.size()) return true;
  auto rng = make_rng(seed, streams::kSampling);
  std::uniform_int_distribution<std::size_t> size_x(kx, x.size()), size_y(ky, y.size());
  for (std::size_t s = 0; s < samples; ++s) {
    const auto xp = random_subset(x, size_x(rng), rng);
    const auto yp = random_subset(y, size_y(rng), rng);
    if (density(h, xp, yp) < target) return false;
  }
  return true;
}

}  // namespace

bool lower_regular_pair(const Graph& h, const VertexSet& x, const VertexSet& y, double eps, double d, double p,
                        RegularityMode mode, std::size_t samples, Seed seed) {
  require(x.universe() == h.n() && y.universe() == h.n(), "lower_regular_pair: sets have the wrong universe");
  require(x.disjoint(y), "lower_regular_pair: X and Y must be disjoint");
  require(eps > 0, "lower_regular_pair: eps must be positive");
  const double target = (1.0 - eps) * d * p;
  if (mode == RegularityMode::kExhaustive) return exhaustive(h, x, y, eps, target);
  return sampled(h, x, y, eps, target, samples, seed);
}

PropertyReport check_slicing(const Graph& h, const VertexSet& x, const VertexSet& y, double eps, double d,
                             double p, std::size_t samples, Seed seed) {
  require(d > 0 && d <= 1, "check_slicing: d must lie in (0, 1]");
  const bool small = x.size() <= kExhaustivePairCap && y.size() <= kExhaustivePairCap;
  const auto mode = small ? RegularityMode::kExhaustive : RegularityMode::kSampled;

  PropertyReport report;
  report.lemma = "slicing";
  report.samples = samples;
  report.seed = seed.value;
  if (!small) report.notes.push_back("pair larger than the exhaustive cap; sampled mode can only refute");

  const bool pair = lower_regular_pair(h, x, y, eps, d, p, mode, samples, seed);
  report.add("pair", "(X,Y) is (eps,d,p)-lower-regular", pair ? 1.0 : 0.0, Relation::kGreaterEq, 1.0,
             small ? 0 : samples);
  if (!pair) {
    report.notes.push_back("pair not lower-regular; slices not examined");
    return report;
  }

  auto rng = make_rng(seed, streams::kSampling + 1);
  const std::size_t kx = min_size(d, x.size()), ky = min_size(d, y.size());
  std::uniform_int_distribution<std::size_t> size_x(kx, x.size()), size_y(ky, y.size());
  std::size_t failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto xs = random_subset(x, size_x(rng), rng);
    const auto ys = random_subset(y, size_y(rng), rng);
    Seed inner{seed.value, seed.trial + s + 1};
    if (!lower_regular_pair(h, xs, ys, eps / d, d, p, mode, samples, inner)) ++failures;
  }
  report.add("slices", "random slices |X_s| >= d|X|, |Y_s| >= d|Y| failing (eps/d,d,p)-lower-regularity",
             static_cast<double>(failures), Relation::kLessEq, 0.0, samples);
  return report;
}

}  // namespace trifree
