#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "trifree/diagnostics.hpp"

namespace trifree {

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::kLessEq:
      return "<=";
    case Relation::kLess:
      return "<";
    case Relation::kGreaterEq:
      return ">=";
    case Relation::kGreater:
      return ">";
  }
  return "?";
}

bool holds(double measured, Relation relation, double threshold) {
  switch (relation) {
    case Relation::kLessEq:
      return measured <= threshold;
    case Relation::kLess:
      return measured < threshold;
    case Relation::kGreaterEq:
      return measured >= threshold;
    case Relation::kGreater:
      return measured > threshold;
  }
  return false;
}

ClauseRecord& PropertyReport::add(std::string clause, std::string description, double measured,
                                  Relation relation, double threshold, std::size_t sampled) {
  clauses.push_back(ClauseRecord{std::move(clause), std::move(description), measured, relation, threshold,
                                 holds(measured, relation, threshold), sampled});
  return clauses.back();
}

bool PropertyReport::pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseRecord& c) { return c.pass; });
}

const ClauseRecord* PropertyReport::find(std::string_view clause) const {
  for (const auto& c : clauses)
    if (c.clause == clause) return &c;
  return nullptr;
}

std::string report_json(const PropertyReport& report, int indent) {
  nlohmann::json j;
  j["lemma"] = report.lemma;
  j["pass"] = report.pass();
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["clauses"] = nlohmann::json::array();
  for (const auto& c : report.clauses) {
    j["clauses"].push_back({{"clause", c.clause},
                            {"description", c.description},
                            {"measured", c.measured},
                            {"relation", std::string(to_string(c.relation))},
                            {"threshold", c.threshold},
                            {"pass", c.pass},
                            {"sampled", c.sampled}});
  }
  j["notes"] = report.notes;
  return j.dump(indent);
}

VertexSet random_subset(const VertexSet& from, std::size_t k, std::mt19937_64& rng) {
  auto members = from.to_vector();
  require(k <= members.size(), "random_subset: k exceeds set size");
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, members.size() - 1);
    std::swap(members[i], members[pick(rng)]);
  }
  VertexSet out(from.universe());
  for (std::size_t i = 0; i < k; ++i) out.insert(members[i]);
  return out;
}

}  // namespace trifree
