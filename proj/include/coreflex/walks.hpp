#ifndef COREFLEX_WALKS_HPP
#define COREFLEX_WALKS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coreflex/digraph.hpp"

namespace coreflex {

/// Number of walks, saturated at two.
enum class WalkCount : std::uint8_t { Zero = 0, One = 1, Many = 2 };

constexpr WalkCount operator+(WalkCount a, WalkCount b) {
  const int s = static_cast<int>(a) + static_cast<int>(b);
  return static_cast<WalkCount>(s > 2 ? 2 : s);
}

constexpr WalkCount operator*(WalkCount a, WalkCount b) {
  const int p = static_cast<int>(a) * static_cast<int>(b);
  return static_cast<WalkCount>(p > 2 ? 2 : p);
}

inline const char* to_string(WalkCount c) {
  switch (c) {
    case WalkCount::Zero: return "0";
    case WalkCount::One: return "1";
    case WalkCount::Many: return "many";
  }
  return "?";
}

/// Square matrix over {0, 1, many}, rows and columns in host vertex order.
class SaturatingCountMatrix {
public:
  SaturatingCountMatrix() = default;
  explicit SaturatingCountMatrix(std::size_t order)
      : order_(order), entries_(order * order, WalkCount::Zero) {}

  static SaturatingCountMatrix identity(std::size_t order) {
    SaturatingCountMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.at(i, i) = WalkCount::One;
    return m;
  }

  static SaturatingCountMatrix adjacency(const Digraph& d) {
    SaturatingCountMatrix m(d.order());
    for (auto [u, v] : d.edges()) m.at(u, v) = WalkCount::One;
    return m;
  }

  std::size_t order() const { return order_; }
  WalkCount& at(Vertex row, Vertex col) { return entries_[row * order_ + col]; }
  WalkCount at(Vertex row, Vertex col) const { return entries_[row * order_ + col]; }

  friend SaturatingCountMatrix operator*(const SaturatingCountMatrix& a, const SaturatingCountMatrix& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("matrix order mismatch");
    const std::size_t n = a.order_;
    SaturatingCountMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const WalkCount aik = a.at(i, k);
        if (aik == WalkCount::Zero) continue;
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const SaturatingCountMatrix&, const SaturatingCountMatrix&) = default;

private:
  std::size_t order_ = 0;
  std::vector<WalkCount> entries_;
};

/// Walk counts of length `n` between every ordered pair, saturated at two.
inline SaturatingCountMatrix walk_counts(const Digraph& d, unsigned n) {
  if (n == 0) throw std::domain_error("walk length must be at least 1");
  SaturatingCountMatrix result = SaturatingCountMatrix::identity(d.order());
  SaturatingCountMatrix base = SaturatingCountMatrix::adjacency(d);
  // square-and-multiply; the saturating semiring is associative
  for (unsigned e = n;;) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

namespace detail {

using BitRow = std::vector<std::uint64_t>;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline void set_bit(BitRow& row, std::size_t i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }
inline bool test_bit(const BitRow& row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1u; }

}  // namespace detail

/// D^n: same vertices, uv an edge iff D has a walk of length n from u to v.
inline Digraph power_digraph(const Digraph& d, unsigned n) {
  if (n == 0) throw std::domain_error("power must be at least 1");
  const std::size_t order = d.order();
  const std::size_t words = detail::words_for(order);
  // reach[u] = endpoints of length-k walks from u, advanced one step at a time
  std::vector<detail::BitRow> reach(order, detail::BitRow(words, 0));
  for (Vertex u = 0; u < order; ++u) detail::set_bit(reach[u], u);
  std::vector<detail::BitRow> step(order, detail::BitRow(words, 0));
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v : d.successors(u)) detail::set_bit(step[u], v);

  for (unsigned k = 0; k < n; ++k) {
    std::vector<detail::BitRow> next(order, detail::BitRow(words, 0));
    for (Vertex u = 0; u < order; ++u)
      for (Vertex w = 0; w < order; ++w)
        if (detail::test_bit(reach[u], w))
          for (std::size_t i = 0; i < words; ++i) next[u][i] |= step[w][i];
    reach = std::move(next);
  }

  Digraph p;
  for (const auto& l : d.labels()) p.add_vertex(l);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = 0; v < order; ++v)
      if (detail::test_bit(reach[u], v)) p.add_edge(u, v);
  return p;
}

}  // namespace coreflex

#endif  // COREFLEX_WALKS_HPP
