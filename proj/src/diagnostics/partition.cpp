#include <algorithm>
#include <bit>
#include <string>

#include "trifree/diagnostics.hpp"

namespace trifree {

PartitionClassification classify_partition(const Graph& h, const std::vector<VertexSet>& parts, double d,
                                           double eps, double p) {
  const std::size_t n = h.n();
  require(parts.size() >= 1, "classify_partition: V_0 is required");
  const std::size_t t = parts.size() - 1;
  require(t <= 64, "classify_partition: at most 64 clusters");
  VertexSet cover(n);
  std::size_t total = 0;
  for (const auto& part : parts) {
    require(part.universe() == n, "classify_partition: part has the wrong universe");
    cover |= part;
    total += part.size();
  }
  require(cover.size() == n && total == n, "classify_partition: parts do not partition V(H)");

  PartitionClassification out;
  out.w = VertexSet(n);
  const double nd = static_cast<double>(n);
  for (Vertex v = 0; v < n; ++v) {
    bool atypical = static_cast<double>(degree_in(h, v, parts[0])) > 2.0 * eps * p * nd;
    std::uint64_t mask = 0;
    for (std::size_t i = 1; i <= t; ++i) {
      const double size = static_cast<double>(parts[i].size());
      const auto deg = static_cast<double>(degree_in(h, v, parts[i]));
      if (deg > (1.0 + eps) * p * size) atypical = true;
      if (deg > 10.0 * d * p * size) mask |= std::uint64_t{1} << (i - 1);
    }
    if (atypical) {
      out.w.insert(v);
      continue;
    }
    auto [it, fresh] = out.classes.try_emplace(mask, n);
    it->second.insert(v);
  }
  return out;
}

PropertyReport check_classification(const Graph& h, const std::vector<VertexSet>& parts, double d, double eps,
                                    double p, double gamma, const std::vector<Edge>* reduced) {
  const auto cls = classify_partition(h, parts, d, eps, p);
  const std::size_t n = h.n(), t = parts.size() - 1;

  PropertyReport report;
  report.lemma = "classify";
  VertexSet seen = cls.w;
  std::size_t overlaps = 0;
  for (const auto& [mask, members] : cls.classes) {
    if (!seen.disjoint(members)) ++overlaps;
    seen |= members;
  }
  report.add("partition", "vertices missing from W and the classes N_I", static_cast<double>(n - seen.size()),
             Relation::kLessEq, 0.0);
  report.add("disjoint", "overlapping pieces", static_cast<double>(overlaps), Relation::kLessEq, 0.0);
  report.notes.push_back("|W| = " + std::to_string(cls.w.size()) + ", non-empty classes = " +
                         std::to_string(cls.classes.size()));

  const double min_degree_target = (1.0 / 3.0 + gamma) * p * static_cast<double>(n);
  if (static_cast<double>(h.min_degree()) >= min_degree_target) {
    std::size_t small = 0;
    for (const auto& [mask, members] : cls.classes)
      if (3 * static_cast<std::size_t>(std::popcount(mask)) <= t) small += members.size();
    report.add("small_classes", "vertices in N_I with |I| <= t/3", static_cast<double>(small), Relation::kLessEq,
               0.0);
  } else {
    report.notes.push_back("minimum degree below (1/3+gamma)pn; small-class check not applicable");
  }

  if (reduced) {
    std::size_t independent = 0;
    for (const auto& [mask, members] : cls.classes) {
      bool ok = true;
      for (const auto& [i, j] : *reduced) {
        require(i >= 1 && j >= 1 && i <= t && j <= t, "check_classification: reduced-graph vertex out of range");
        if (((mask >> (i - 1)) & 1u) && ((mask >> (j - 1)) & 1u)) ok = false;
      }
      if (ok) ++independent;
    }
    report.notes.push_back("classes with R[I] independent: " + std::to_string(independent) + " of " +
                           std::to_string(cls.classes.size()));
  }
  return report;
}

}  // namespace trifree
