#include <cmath>

#include "trifree/diagnostics.hpp"

namespace trifree {

VertexSet canonical_witness(const Graph& gamma, const Graph& h, Vertex x, const VertexSet& a) {
  require(gamma.n() == h.n() && a.universe() == gamma.n(), "canonical_witness: size mismatch");
  gamma.check_vertex(x);
  auto s = gamma.neighbors(x) & a;
  s -= h.neighbors(x);
  return s;
}

bool is_bad_star(const Graph& gamma, const StarCertificate& cert, double p) {
  const std::size_t n = gamma.n();
  require(cert.leaves.universe() == n && cert.ambient.universe() == n && cert.witness.universe() == n,
          "is_bad_star: certificate sets have the wrong universe");
  gamma.check_vertex(cert.center);
  require(!cert.leaves.contains(cert.center), "is_bad_star: centre listed as a leaf");
  require(cert.leaves.subset_of(gamma.neighbors(cert.center)), "is_bad_star: leaf not adjacent to the centre");
  require(cert.witness.subset_of(gamma.neighbors(cert.center) & cert.ambient),
          "is_bad_star: witness not inside N(x, A)");

  const double size_a = static_cast<double>(cert.ambient.size());
  if (static_cast<double>(cert.witness.size()) > cert.q * p * size_a) return false;
  const double need = (1.0 + cert.eps) * cert.q * p * p * size_a;
  bool ok = true;
  cert.leaves.for_each([&](Vertex y) {
    if (ok && static_cast<double>(degree_in(gamma, y, cert.witness)) < need) ok = false;
  });
  return ok;
}

BadStarPacking count_disjoint_bad_stars(const Graph& gamma, const Graph& h, const VertexSet& a, double q,
                                        double eps, std::size_t s, double p) {
  const std::size_t n = gamma.n();
  require(h.n() == n && a.universe() == n, "count_disjoint_bad_stars: size mismatch");
  require(s >= 1, "count_disjoint_bad_stars: s must be positive");
  require(p > 0 && p <= 1, "count_disjoint_bad_stars: p must lie in (0, 1]");

  BadStarPacking out;
  const double nd = static_cast<double>(n), size_a = static_cast<double>(a.size());
  out.bound = 0.5 / p;
  out.s_in_regime = static_cast<double>(s) >= 100.0 / (q * eps * eps * p);
  out.q_in_range = eps < q && q < 1.0;
  out.ambient_large = 3.0 * size_a >= nd;

  const double witness_cap = q * p * size_a;
  const double need = (1.0 + eps) * q * p * p * size_a;
  VertexSet used(n);
  for (Vertex x = 0; x < n; ++x) {
    if (a.contains(x) || used.contains(x)) continue;
    auto witness = canonical_witness(gamma, h, x, a);
    if (static_cast<double>(witness.size()) > witness_cap) continue;
    VertexSet leaves(n);
    std::size_t taken = 0;
    bits::for_each_bit(gamma.row(x), [&](Vertex y) {
      if (taken == s || a.contains(y) || used.contains(y)) return;
      if (static_cast<double>(degree_in(gamma, y, witness)) >= need) {
        leaves.insert(y);
        ++taken;
      }
    });
    if (taken < s) continue;
    used.insert(x);
    used |= leaves;
    out.stars.push_back({x, std::move(leaves), a, q, eps, std::move(witness)});
  }
  return out;
}

PropertyReport check_bad_stars(const Graph& gamma, const Graph& h, const VertexSet& a, double q, double eps,
                               std::size_t s, double p) {
  const auto packing = count_disjoint_bad_stars(gamma, h, a, q, eps, s, p);
  PropertyReport report;
  report.lemma = "stars";
  report.add("count", "greedy disjoint (q,eps)-bad s-stars outside A vs p^-1/2",
             static_cast<double>(packing.count()), Relation::kLess, packing.bound);
  if (!packing.s_in_regime) report.notes.push_back("s below 100 q^-1 eps^-2 p^-1");
  if (!packing.q_in_range) report.notes.push_back("q outside (eps, 1)");
  if (!packing.ambient_large) report.notes.push_back("|A| below n/3");
  return report;
}

}  // namespace trifree
