#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "trifree/errors.hpp"

namespace trifree {

using Vertex = std::uint32_t;

namespace bits {

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline std::size_t popcount(std::span<const std::uint64_t> a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t popcount_and(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                std::span<const std::uint64_t> c) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    k += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
  return k;
}

inline bool intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                       std::span<const std::uint64_t> c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i] & c[i]) return true;
  return false;
}

/// Calls f(index) for every set bit, in increasing order.
template <class F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w) {
      const int b = std::countr_zero(w);
      f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
}

}  // namespace bits

/// Subset of the vertex range 0..universe-1 stored as a bitset with a cached
/// cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(bits::words_for(universe), 0) {}

  static VertexSet full(std::size_t universe) { return range(universe, 0, static_cast<Vertex>(universe)); }
  /// Vertices first..last-1.
  static VertexSet range(std::size_t universe, Vertex first, Vertex last);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> vertices);
  template <class Range>
  static VertexSet from(std::size_t universe, const Range& vertices) {
    VertexSet s(universe);
    for (auto v : vertices) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const;
  bool disjoint(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<Vertex> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    bits::for_each_bit(words_, f);
  }

 private:
  void check_universe(const VertexSet& other) const;
  void recount() { count_ = bits::popcount(words_); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

}  // namespace trifree
