#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trifree/gadgets.hpp"
#include "trifree/graph.hpp"
#include "trifree/random_models.hpp"

namespace trifree {

/// Default for the G(n,p,p') constant c when the caller does not override it.
inline constexpr double kDefaultC = 1e-3;

/// How c was chosen.
enum class CSource { kExplicit, kFormula };

/// All constants of the extremal construction for one (gamma, r, n, p).
struct ConstructionParams {
  double gamma = 0;
  std::size_t r = 0;
  std::size_t n = 0;
  double p = 0;
  Gadget gadget;
  std::size_t ell = 0;   // v(F)
  double big_k = 0;      // 8 r ell
  double eps = 0;        // gamma / (400 r^2 ell^2)
  double c = 0;
  CSource c_source = CSource::kExplicit;
  double c_prime = 0;    // min(1/K, c / 10^4)
  double pprime = 0;     // c K^2 p^-2 n^-1
  Seed seed;
  /// n^{-1/2}/c' <= p <= c' and p' <= 1.
  bool valid = false;
  /// K n^{-1/2} <= p <= eps^2 c / (10^4 K^2), the regime of the G(n,p,p') lemma.
  bool lemma_regime = false;
};

/// c = min(eps/2, K^-2).
double lemma_constant(double eps, double big_k);
/// p' = c K^2 p^-2 n^-1.
double sparsification_probability(double c, double big_k, double p, std::size_t n);

/// Derives every constant. When c is empty the formula value min(eps/2, K^-2)
/// is used. Throws ParameterError when p' > 1.
ConstructionParams derive_params(double gamma, std::size_t r, std::size_t n, double p, std::optional<double> c,
                                 Seed seed);

/// B/A halves plus the gadget blow-up classes B_1..B_ell.
struct ConstructionLayout {
  GnppLayout halves;
  std::vector<VertexSet> parts;
  /// part_of[v] = index of the class containing v, or -1 for v in A.
  std::vector<int> part_of;

  static ConstructionLayout make(std::size_t n, std::size_t ell);
};

struct StageDeletions {
  std::size_t g1_a_internal = 0;
  std::size_t g1_b_dropped = 0;
  std::size_t g2 = 0;
  std::size_t g3 = 0;
  std::size_t h = 0;
};

struct ConstructionTrace {
  ConstructionLayout layout;
  Graph g1, g2, g3, h;
  StageDeletions deleted;
  /// A-B edges removed at each vertex in the final stage.
  std::vector<std::size_t> h_deletions;
  std::size_t min_degree_h = 0;
  double min_degree_target = 0;  // (1/2 - gamma) p n
  bool min_degree_ok = false;
  std::uint64_t triangles_h = 0;
  bool valid = false;
};

/// Drops A-internal edges and keeps each B-internal edge with probability p'.
Graph stage_g1(const Graph& gamma, const ConstructionParams& params, const GnppLayout& halves);

/// Keeps A-B edges and B-internal edges between classes joined in F.
Graph stage_g2(const Graph& g1, const ConstructionLayout& layout, const Graph& f);

/// Removes B-internal edges at vertices whose G2 degree into B is >= p p' n
/// or <= p p' n / 10 (degrees read once from the input).
Graph stage_g3(const Graph& g2, const ConstructionParams& params, const GnppLayout& halves);

/// Removes every A-B edge ab lying in a triangle abb' with b' in B. When
/// tallies is given it receives the number of removed edges at each vertex.
Graph stage_h(const Graph& g3, const GnppLayout& halves, std::vector<std::size_t>* tallies = nullptr);

/// Runs all four stages on gamma.
ConstructionTrace construct(const Graph& gamma, const ConstructionParams& params);

/// Structural invariants that must hold on every run.
struct ChainCheck {
  bool monotone = false;              // H ⊆ G3 ⊆ G2 ⊆ G1 ⊆ Γ
  bool a_independent = false;         // in G1, G2, G3, H
  bool a_degrees_preserved = false;   // deg(a, B) equal in G1, G2, G3
  bool b_edges_respect_gadget = false;
  bool ok() const { return monotone && a_independent && a_degrees_preserved && b_edges_respect_gadget; }
};

ChainCheck check_chain(const Graph& gamma, const ConstructionTrace& trace, const Graph& f);

}  // namespace trifree
