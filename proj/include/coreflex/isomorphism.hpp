#ifndef COREFLEX_ISOMORPHISM_HPP
#define COREFLEX_ISOMORPHISM_HPP

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "coreflex/digraph.hpp"

namespace coreflex {

/// Thrown instead of attempting a search on instances past the size limit.
class InstanceTooLarge : public std::length_error {
public:
  explicit InstanceTooLarge(std::size_t order, std::size_t limit)
      : std::length_error("instance too large for isomorphism search: " + std::to_string(order) +
                          " vertices (limit " + std::to_string(limit) + ")") {}
};

inline constexpr std::size_t kIsomorphismVertexLimit = 12;

template <class G>
concept AnyDigraph = std::same_as<G, Digraph> || std::same_as<G, MultiDigraph>;

namespace detail {

// Edge multiplicities as a dense matrix.
struct MultiplicityMatrix {
  std::size_t order = 0;
  std::vector<unsigned> counts;

  unsigned operator()(Vertex u, Vertex v) const { return counts[u * order + v]; }
};

inline MultiplicityMatrix multiplicities(const Digraph& d) {
  MultiplicityMatrix m{d.order(), std::vector<unsigned>(d.order() * d.order(), 0)};
  for (auto [u, v] : d.edges()) m.counts[u * m.order + v] = 1;
  return m;
}

inline MultiplicityMatrix multiplicities(const MultiDigraph& d) {
  MultiplicityMatrix m{d.order(), std::vector<unsigned>(d.order() * d.order(), 0)};
  for (const auto& a : d.arcs()) ++m.counts[a.tail * m.order + a.head];
  return m;
}

using Signature = std::tuple<unsigned, unsigned, unsigned>;  // out, in, loops

inline std::vector<Signature> signatures(const MultiplicityMatrix& m) {
  std::vector<Signature> sig(m.order, {0, 0, 0});
  for (Vertex u = 0; u < m.order; ++u)
    for (Vertex v = 0; v < m.order; ++v) {
      std::get<0>(sig[u]) += m(u, v);
      std::get<1>(sig[v]) += m(u, v);
    }
  for (Vertex u = 0; u < m.order; ++u) std::get<2>(sig[u]) = m(u, u);
  return sig;
}

class IsomorphismSearch {
public:
  IsomorphismSearch(MultiplicityMatrix a, MultiplicityMatrix b)
      : a_(std::move(a)), b_(std::move(b)), sig_a_(signatures(a_)), sig_b_(signatures(b_)) {}

  std::optional<std::vector<Vertex>> run() {
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    plan_order();
    mapping_.assign(a_.order, kUnmapped);
    used_.assign(b_.order, 0);
    if (!extend(0)) return std::nullopt;
    return mapping_;
  }

private:
  static constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

  // Greedy order: next vertex is the one most connected to those already placed.
  void plan_order() {
    const std::size_t n = a_.order;
    std::vector<char> placed(n, 0);
    order_.clear();
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = kUnmapped;
      std::pair<unsigned, unsigned> best_key{0, 0};
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        unsigned links = 0;
        for (Vertex p : order_) links += a_(v, p) + a_(p, v);
        const unsigned degree = std::get<0>(sig_a_[v]) + std::get<1>(sig_a_[v]);
        const std::pair<unsigned, unsigned> key{links, degree};
        if (best == kUnmapped || key > best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
  }

  bool consistent(Vertex v, Vertex w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order_[i];
      const Vertex y = mapping_[x];
      if (a_(v, x) != b_(w, y) || a_(x, v) != b_(y, w)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order; ++w) {
      if (used_[w] || sig_a_[v] != sig_b_[w] || !consistent(v, w, depth)) continue;
      mapping_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
      mapping_[v] = kUnmapped;
    }
    return false;
  }

  MultiplicityMatrix a_;
  MultiplicityMatrix b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> mapping_;
  std::vector<char> used_;
};

}  // namespace detail

/// Finds a vertex bijection `m` (a-vertex -> b-vertex) carrying the edge
/// multiset of `a` onto that of `b`, by backtracking with degree pruning.
/// Throws InstanceTooLarge when a search would be needed on more than
/// `vertex_limit` vertices.
template <AnyDigraph G>
std::optional<std::vector<Vertex>> find_isomorphism(const G& a, const G& b,
                                                    std::size_t vertex_limit = kIsomorphismVertexLimit) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (a.order() > vertex_limit) throw InstanceTooLarge(a.order(), vertex_limit);
  return detail::IsomorphismSearch(detail::multiplicities(a), detail::multiplicities(b)).run();
}

template <AnyDigraph G>
bool isomorphic(const G& a, const G& b, std::size_t vertex_limit = kIsomorphismVertexLimit) {
  return find_isomorphism(a, b, vertex_limit).has_value();
}

}  // namespace coreflex

#endif  // COREFLEX_ISOMORPHISM_HPP
