#include "trifree/graph.hpp"

#include <algorithm>
#include <cassert>

namespace trifree {

// VertexSet ------------------------------------------------------------------

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last) {
  require(first <= last && last <= universe, "vertex range out of bounds");
  VertexSet s(universe);
  for (Vertex v = first; v < last; ++v) s.words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  s.count_ = last - first;
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> vertices) {
  VertexSet s(universe);
  for (auto v : vertices) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  require(v < universe_, "vertex " + std::to_string(v) + " outside set universe");
  auto& w = words_[v >> 6];
  const auto bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  auto& w = words_[v >> 6];
  const auto bit = std::uint64_t{1} << (v & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  if (universe_ % 64 != 0 && !s.words_.empty()) s.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  s.count_ = universe_ - count_;
  return s;
}

void VertexSet::check_universe(const VertexSet& other) const {
  require(universe_ == other.universe_, "vertex sets over different universes");
}

bool VertexSet::disjoint(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return false;
  return true;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

// Graph ----------------------------------------------------------------------

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    require(u < n && v < n, "edge endpoint out of range");
    require(u != v, "loop at vertex " + std::to_string(u));
    require(b.add_edge(u, v), "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  *this = std::move(b).build();
}

Graph Graph::complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::cycle(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph Graph::path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph Graph::petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, 5 + i);
  }
  return std::move(b).build();
}

void Graph::finalize() {
  degrees_.assign(n_, 0);
  std::size_t total = 0;
  for (Vertex v = 0; v < n_; ++v) {
    degrees_[v] = static_cast<std::uint32_t>(bits::popcount(row(v)));
    total += degrees_[v];
  }
  m_ = total / 2;
#ifndef NDEBUG
  for (Vertex v = 0; v < n_; ++v) {
    assert(!has_edge(v, v));
    for_each_neighbor(v, [&](Vertex u) { assert(has_edge(u, v)); });
  }
#endif
}

std::size_t Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  VertexSet s(n_);
  bits::for_each_bit(row(v), [&](Vertex u) { s.insert(u); });
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for_each_edge([&](Vertex u, Vertex v) { out.emplace_back(u, v); });
  return out;
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (Vertex v = 0; v < n_; ++v) {
    adj[v].reserve(degrees_[v]);
    for_each_neighbor(v, [&](Vertex u) { adj[v].push_back(u); });
  }
  return adj;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

Graph Graph::induced(const VertexSet& s, std::vector<Vertex>* original) const {
  require(s.universe() == n_, "induced: vertex set universe mismatch");
  const auto keep = s.to_vector();
  std::vector<Vertex> relabel(n_, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i);
  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    bits::for_each_bit(row(keep[i]), [&](Vertex u) {
      if (u > keep[i] && s.contains(u)) b.add_edge(static_cast<Vertex>(i), relabel[u]);
    });
  }
  if (original) *original = keep;
  return std::move(b).build();
}

Graph Graph::remove_edges(std::span<const Edge> edges) const {
  GraphBuilder b(*this);
  for (auto [u, v] : edges) {
    require(u < n_ && v < n_ && u != v, "remove_edges: invalid edge");
    require(b.remove_edge(u, v), "remove_edges: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  }
  return std::move(b).build();
}

// GraphBuilder ---------------------------------------------------------------

GraphBuilder::GraphBuilder(std::size_t n) {
  g_.n_ = n;
  g_.stride_ = bits::words_for(n);
  g_.bits_.assign(n * g_.stride_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::set_bit(Vertex u, Vertex v, bool on) {
  auto& w = g_.bits_[u * g_.stride_ + (v >> 6)];
  const auto bit = std::uint64_t{1} << (v & 63);
  w = on ? (w | bit) : (w & ~bit);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  assert(u < g_.n_ && v < g_.n_ && u != v);
  if (g_.has_edge(u, v)) return false;
  set_bit(u, v, true);
  set_bit(v, u, true);
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  if (!g_.has_edge(u, v)) return false;
  set_bit(u, v, false);
  set_bit(v, u, false);
  return true;
}

Graph GraphBuilder::build() && {
  g_.finalize();
  return std::move(g_);
}

// Counting primitives ----------------------------------------------------------

namespace {

void check_set(const Graph& g, const VertexSet& s) {
  require(s.universe() == g.n(), "vertex set universe does not match graph order");
}

}  // namespace

std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& s) {
  g.check_vertex(v);
  check_set(g, s);
  return bits::popcount_and(g.row(v), s.words());
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v, const VertexSet& s) {
  g.check_vertex(u);
  g.check_vertex(v);
  require(u != v, "common_neighbors needs two distinct vertices");
  check_set(g, s);
  VertexSet out(g.n());
  auto a = g.row(u), b = g.row(v), c = s.words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t w = a[i] & b[i] & c[i];
    while (w) {
      out.insert(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t common_degree_in(const Graph& g, Vertex u, Vertex v, const VertexSet& s) {
  g.check_vertex(u);
  g.check_vertex(v);
  require(u != v, "common_degree_in needs two distinct vertices");
  check_set(g, s);
  return bits::popcount_and(g.row(u), g.row(v), s.words());
}

std::size_t edges_between(const Graph& g, const VertexSet& u, const VertexSet& v) {
  check_set(g, u);
  check_set(g, v);
  require(u.disjoint(v), "edges_between needs disjoint sets");
  std::size_t total = 0;
  u.for_each([&](Vertex x) { total += bits::popcount_and(g.row(x), v.words()); });
  return total;
}

std::size_t edges_within(const Graph& g, const VertexSet& u) {
  check_set(g, u);
  std::size_t total = 0;
  u.for_each([&](Vertex x) { total += bits::popcount_and(g.row(x), u.words()); });
  return total / 2;
}

double density(const Graph& g, const VertexSet& u, const VertexSet& v) {
  require(!u.empty() && !v.empty(), "density needs two nonempty sets");
  return static_cast<double>(edges_between(g, u, v)) /
         (static_cast<double>(u.size()) * static_cast<double>(v.size()));
}

TriangleCensus triangle_census(const Graph& g) {
  TriangleCensus census;
  const std::size_t stride = bits::words_for(g.n());
  g.for_each_edge([&](Vertex u, Vertex v) {
    // Count w > v in N(u) ∩ N(v) so every triangle u<v<w is seen once.
    auto a = g.row(u), b = g.row(v);
    const std::size_t first = (static_cast<std::size_t>(v) + 1) >> 6;
    for (std::size_t i = first; i < stride; ++i) {
      std::uint64_t w = a[i] & b[i];
      if (i == first) w &= ~std::uint64_t{0} << ((v + 1) & 63);
      if (!w) continue;
      if (!census.witness)
        census.witness = std::array<Vertex, 3>{u, v, static_cast<Vertex>(i * 64 + std::countr_zero(w))};
      census.count += static_cast<std::uint64_t>(std::popcount(w));
    }
  });
  return census;
}

}  // namespace trifree
