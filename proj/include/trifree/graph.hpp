#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trifree/vertex_set.hpp"

namespace trifree {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
///
/// Rows are padded to whole 64-bit words so that row(v) spans line up with
/// VertexSet::words() of the same universe.
class Graph {
 public:
  Graph() = default;
  /// Throws ArgumentError on loops, out-of-range endpoints or repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph petersen();

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return degrees_[v];
  }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  bool has_edge(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && ((bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1u);
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }
  VertexSet neighbors(Vertex v) const;

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    bits::for_each_bit(row(v), f);
  }
  /// Calls f(u, v) for every edge with u < v, lexicographically.
  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex u = 0; u < n_; ++u) {
      auto r = row(u);
      const std::size_t first_word = (static_cast<std::size_t>(u) + 1) >> 6;
      for (std::size_t i = first_word; i < stride_; ++i) {
        std::uint64_t w = r[i];
        if (i == first_word) w &= ~std::uint64_t{0} << ((u + 1) & 63);
        while (w) {
          const auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
          f(u, v);
          w &= w - 1;
        }
      }
    }
  }

  /// Adjacency lists in increasing neighbor order.
  std::vector<std::vector<Vertex>> adjacency_lists() const;

  /// True when every edge of *this is an edge of other (same vertex count).
  bool is_subgraph_of(const Graph& other) const;

  /// Induced subgraph on s, relabelled 0..|s|-1 in increasing order. When
  /// original is non-null it receives the old label of each new vertex.
  Graph induced(const VertexSet& s, std::vector<Vertex>* original = nullptr) const;

  /// Copy without the listed edges. Removing a non-edge is an ArgumentError.
  Graph remove_edges(std::span<const Edge> edges) const;

  /// Copy keeping only edges (u, v), u < v, for which keep(u, v) is true.
  template <class Keep>
  Graph filter_edges(Keep&& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

  void check_vertex(Vertex v) const {
    if (v >= n_) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  }

 private:
  friend class GraphBuilder;
  void finalize();

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degrees_;
  std::size_t m_ = 0;
};

/// Mutable staging area used by samplers and graph transforms.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  /// Copies the edge set of g.
  explicit GraphBuilder(const Graph& g);

  std::size_t n() const { return g_.n_; }
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  /// Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  void set_bit(Vertex u, Vertex v, bool on);
  Graph g_;
};

template <class Keep>
Graph Graph::filter_edges(Keep&& keep) const {
  GraphBuilder b(n_);
  for_each_edge([&](Vertex u, Vertex v) {
    if (keep(u, v)) b.add_edge(u, v);
  });
  return std::move(b).build();
}

// Set-indexed counting primitives.

std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& s);
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v, const VertexSet& s);
std::size_t common_degree_in(const Graph& g, Vertex u, Vertex v, const VertexSet& s);
/// e(U, V) for disjoint U, V.
std::size_t edges_between(const Graph& g, const VertexSet& u, const VertexSet& v);
/// e(U).
std::size_t edges_within(const Graph& g, const VertexSet& u);
/// e(U, V) / (|U| |V|).
double density(const Graph& g, const VertexSet& u, const VertexSet& v);

struct TriangleCensus {
  std::uint64_t count = 0;
  std::optional<std::array<Vertex, 3>> witness;
  bool triangle_free() const { return count == 0; }
};

TriangleCensus triangle_census(const Graph& g);

// Plain-text edge list: "n m" then one "u v" line per edge, u < v, sorted.

void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
void save_edge_list(const std::string& path, const Graph& g);
Graph load_edge_list(const std::string& path);

}  // namespace trifree
