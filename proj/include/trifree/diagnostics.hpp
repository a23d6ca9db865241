#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trifree/construction.hpp"
#include "trifree/graph.hpp"
#include "trifree/random_models.hpp"

namespace trifree {

// Reports ---------------------------------------------------------------------

enum class Relation { kLessEq, kLess, kGreaterEq, kGreater };

std::string_view to_string(Relation relation);
/// measured REL threshold, compared exactly as written (no slack).
bool holds(double measured, Relation relation, double threshold);

struct ClauseRecord {
  std::string clause;
  std::string description;
  double measured = 0;
  Relation relation = Relation::kLessEq;
  double threshold = 0;
  bool pass = false;
  /// Number of random sets/pairs behind the value; 0 for exhaustive checks.
  std::size_t sampled = 0;
};

/// Per-lemma, per-clause outcome. A sampled clause passing is evidence, not
/// proof: `sampled` records how many random sets were looked at.
struct PropertyReport {
  std::string lemma;
  std::vector<ClauseRecord> clauses;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  ClauseRecord& add(std::string clause, std::string description, double measured, Relation relation,
                    double threshold, std::size_t sampled = 0);
  bool pass() const;
  const ClauseRecord* find(std::string_view clause) const;
};

std::string report_json(const PropertyReport& report, int indent = 2);

// Properties of G(n,p,p') ------------------------------------------------------------

/// Clauses (a)-(d) exhaustively, (e) on `samples` random pairs U, V ⊆ B of
/// size ceil(2n/K). p, p', c and K are taken from params.
PropertyReport check_g1nice(const Graph& g1, const GnppLayout& layout, const ConstructionParams& params,
                            double eps, std::size_t samples, Seed seed);

// Properties of G(n,p) -------------------------------------------------------------

struct BasicsInputs {
  double eps = 0.1;
  std::size_t big_m = 10;
  double p = 0;
  std::optional<VertexSet> a;  // user-supplied sets, checked in addition to random ones
  std::optional<VertexSet> b;
  std::size_t samples = 50;
  Seed seed;
};

/// Degree concentration (a) exhaustively; set-edge bounds (b), pair densities
/// (c) and per-set degree typicality (d) on supplied plus random sets.
PropertyReport check_basics(const Graph& gamma, const BasicsInputs& inputs);

struct AtypicalEdges {
  std::vector<Edge> edges;
  double threshold = 0;  // 10^3 M eps^-2 p^-1 n
  bool within_bound() const { return static_cast<double>(edges.size()) <= threshold; }
};

/// Edges uv failing one of: deg(u,A), deg(v,A) = (1±eps)p|A|;
/// deg(u,B), deg(v,B) = (1±eps)p|B|; deg(u,v,B) >= (1-eps)p^2|B|.
AtypicalEdges atypical_edges(const Graph& gamma, const VertexSet& a, const VertexSet& b, double eps, double p,
                             std::size_t big_m);

PropertyReport check_atypical(const Graph& gamma, const VertexSet& a, const VertexSet& b, double eps, double p,
                              std::size_t big_m);

// Bad stars ---------------------------------------------------------------------

/// An s-star with centre x claimed (q, eps)-bad for the ambient set A, with
/// the witness S.
struct StarCertificate {
  Vertex center = 0;
  VertexSet leaves;
  VertexSet ambient;
  double q = 0;
  double eps = 0;
  VertexSet witness;
};

/// N_Γ(x, A) \ N_H(x, A).
VertexSet canonical_witness(const Graph& gamma, const Graph& h, Vertex x, const VertexSet& a);

/// Checks the given witness: |S| <= q p |A| and every leaf y has
/// deg_Γ(y, S) >= (1 + eps) q p^2 |A|.
bool is_bad_star(const Graph& gamma, const StarCertificate& cert, double p);

struct BadStarPacking {
  std::vector<StarCertificate> stars;
  double bound = 0;              // p^-1 / 2
  bool s_in_regime = false;      // s >= 100 q^-1 eps^-2 p^-1
  bool q_in_range = false;       // eps < q < 1
  bool ambient_large = false;    // |A| >= n/3
  std::size_t count() const { return stars.size(); }
  bool below_bound() const { return static_cast<double>(stars.size()) < bound; }
};

/// Greedy packing of vertex-disjoint s-stars of Γ outside A whose canonical
/// witnesses certify (q, eps)-badness. A lower bound on the maximum packing.
BadStarPacking count_disjoint_bad_stars(const Graph& gamma, const Graph& h, const VertexSet& a, double q,
                                        double eps, std::size_t s, double p);

PropertyReport check_bad_stars(const Graph& gamma, const Graph& h, const VertexSet& a, double q, double eps,
                               std::size_t s, double p);

// Max-cut gadgets ----------------------------------------------------------------

/// {x in X : deg_H(x) > 0 and deg_H(x, X) >= gamma deg_H(x)}.
VertexSet tilde_set(const Graph& h, const VertexSet& x, double gamma);

struct Orientation {
  std::size_t n = 0;
  std::vector<Edge> arcs;  // (tail, head)
  VertexSet tilde;

  std::vector<std::size_t> in_degrees() const;
  /// Tails of arcs into each vertex, increasing.
  std::vector<std::vector<Vertex>> in_neighbors() const;
};

/// Directs every edge of Hp[X]. The candidate head x is the endpoint in X̃
/// when exactly one endpoint is, otherwise the lower index; the edge points to
/// x iff 3 |N_Γ(x,x',Y) \ N_Hp(x,Y)| >= 2 deg_Γ(x,x',Y), else to x'.
Orientation orient_edges(const Graph& gamma, const Graph& hp, const VertexSet& x, const VertexSet& y,
                         const VertexSet& tilde);

struct InStar {
  Vertex center = 0;
  std::vector<Vertex> leaves;
};

/// Scans centres in increasing order (skipping `exclude`) and takes a star
/// whenever at least s unused in-neighbours remain, using the s smallest.
std::vector<InStar> greedy_in_stars(const Orientation& orientation, std::size_t s, const VertexSet& exclude);

// Vertex classification relative to a partition -------------------------------------

struct PartitionClassification {
  VertexSet w;
  /// Bitmask over parts 1..t (bit i-1 for V_i) -> N_I. Only non-empty classes.
  std::map<std::uint64_t, VertexSet> classes;
};

/// parts[0] is the exceptional set V_0, parts[1..t] the clusters (t <= 64).
/// W: more than (1+eps)p|V_i| neighbours in some V_i or more than 2 eps p n in
/// V_0. N_I over V(H) \ W: |N(v) ∩ V_i| > 10 d p |V_i| exactly for i in I.
PartitionClassification classify_partition(const Graph& h, const std::vector<VertexSet>& parts, double d,
                                           double eps, double p);

/// Classification plus the small-class check: when δ(H) >= (1/3+gamma)pn,
/// reports whether every N_I with |I| <= t/3 is empty. With reduced-graph
/// edges (over 1..t) it also notes which non-empty classes have R[I] independent.
PropertyReport check_classification(const Graph& h, const std::vector<VertexSet>& parts, double d, double eps,
                                    double p, double gamma, const std::vector<Edge>* reduced = nullptr);

// Regular pairs ---------------------------------------------------------------------

enum class RegularityMode { kExhaustive, kSampled };

inline constexpr std::size_t kExhaustivePairCap = 12;

/// (eps, d, p)-lower-regularity of (X, Y): d(X', Y') >= (1-eps) d p for all
/// nonempty X' ⊆ X, Y' ⊆ Y with |X'| >= eps|X|, |Y'| >= eps|Y|. Exhaustive mode
/// needs |X|, |Y| <= 12; sampled mode checks `samples` random subset pairs and
/// can only refute.
bool lower_regular_pair(const Graph& h, const VertexSet& x, const VertexSet& y, double eps, double d, double p,
                        RegularityMode mode, std::size_t samples = 0, Seed seed = {});

/// Pair lower-regularity and, for `samples` random slices with
/// |X_s| >= d|X|, |Y_s| >= d|Y|, (eps/d, d, p)-lower-regularity of the slice.
PropertyReport check_slicing(const Graph& h, const VertexSet& x, const VertexSet& y, double eps, double d,
                             double p, std::size_t samples, Seed seed);

/// Uniform random subset of `from` with exactly k elements.
VertexSet random_subset(const VertexSet& from, std::size_t k, std::mt19937_64& rng);

}  // namespace trifree
