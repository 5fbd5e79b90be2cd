#ifndef COREFLEX_CORESETS_HPP
#define COREFLEX_CORESETS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreflex/digraph.hpp"

namespace coreflex {

// Coresets (coreflexive vertex sets): the set of all sinks, plus every
// minimal nonempty U with beta(alpha(U)) = U. Together with the conventional
// empty class U0 they partition V(D), and so do their successor sets.

/// Partition of V(D) into coresets. The empty class U0 is implicit: it is
/// never stored, but successor partitions and decompositions reserve slot 0
/// for it.
struct CoresetPartition {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  /// Nonempty, pairwise disjoint, ordered by smallest member.
  std::vector<VertexSet> classes;
  /// Index of the class of all sinks; absent when D has no sinks.
  std::optional<std::size_t> trivial_index;
  /// Class index of each vertex.
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
  bool is_trivial(std::size_t i) const { return trivial_index && *trivial_index == i; }

  std::vector<VertexSet> nontrivial() const {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (!is_trivial(i)) out.push_back(classes[i]);
    return out;
  }
};

/// Limit of U <- beta(alpha(U)) from `seed`: the smallest coreset-closed set
/// containing it. From a single vertex this is that vertex's coreset.
inline VertexSet coreset_closure(const Digraph& d, const VertexSet& seed) {
  check_members(d, seed);
  if (seed.empty()) throw std::domain_error("coreset closure needs a nonempty seed");
  for (Vertex v : seed)
    if (d.is_sink(v))
      throw std::domain_error("seed vertex '" + d.label(v) + "' is a sink; sinks form the trivial coreset");

  VertexSet current = seed;
  for (;;) {
    VertexSet next = beta(d, alpha(d, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

inline CoresetPartition coreset_partition(const Digraph& d) {
  CoresetPartition p;
  p.class_of.assign(d.order(), CoresetPartition::npos);

  std::vector<VertexSet> found;
  VertexSet sink_set = sinks(d);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.is_sink(v) || p.class_of[v] != CoresetPartition::npos) continue;
    VertexSet cls = coreset_closure(d, VertexSet{v});
    for (Vertex u : cls) {
      if (p.class_of[u] != CoresetPartition::npos)
        throw std::logic_error("coreset closures overlap at vertex '" + d.label(u) + "'");
      p.class_of[u] = found.size();
    }
    found.push_back(std::move(cls));
  }
  if (!sink_set.empty()) found.push_back(sink_set);

  std::sort(found.begin(), found.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Vertex u : found[i]) p.class_of[u] = i;
    if (found[i] == sink_set) p.trivial_index = i;
  }
  p.classes = std::move(found);
  return p;
}

/// Successor sets aligned with the coresets: entry 0 is alpha(U0) = the
/// sources, entry i+1 is alpha(classes[i]). Empty entries are kept.
inline std::vector<VertexSet> successor_partition(const Digraph& d, const CoresetPartition& p) {
  std::vector<VertexSet> out;
  out.reserve(p.size() + 1);
  out.push_back(sources(d));
  for (const auto& cls : p.classes) out.push_back(alpha(d, cls));
  return out;
}

inline std::vector<VertexSet> successor_partition(const Digraph& d) {
  return successor_partition(d, coreset_partition(d));
}

/// Core subgraph: all edges from a coreset into its successor set.
struct CorePart {
  VertexSet coreset;
  VertexSet successors;
  std::vector<Edge> edges;
};

/// parts[0] belongs to U0 (empty coreset, the sources, no edges); parts[i+1]
/// to classes[i] of the coreset partition.
struct CoreDecomposition {
  std::vector<CorePart> parts;
};

inline CoreDecomposition core_decomposition(const Digraph& d, const CoresetPartition& p) {
  CoreDecomposition dec;
  dec.parts.reserve(p.size() + 1);
  dec.parts.push_back(CorePart{VertexSet{}, sources(d), {}});
  for (const auto& cls : p.classes) {
    CorePart part{cls, alpha(d, cls), {}};
    for (Vertex u : cls)
      for (Vertex v : d.successors(u)) part.edges.emplace_back(u, v);
    dec.parts.push_back(std::move(part));
  }
  return dec;
}

inline CoreDecomposition core_decomposition(const Digraph& d) {
  return core_decomposition(d, coreset_partition(d));
}

/// The part as a standalone digraph on U_i u alpha(U_i), in host vertex order.
inline Digraph core_subgraph(const Digraph& d, const CorePart& part) {
  std::vector<char> keep(d.order(), 0);
  for (Vertex v : part.coreset) keep[v] = 1;
  for (Vertex v : part.successors) keep[v] = 1;
  Digraph sub;
  for (Vertex v = 0; v < d.order(); ++v)
    if (keep[v]) sub.add_vertex(d.label(v));
  for (auto [u, v] : part.edges) sub.add_edge(d.label(u), d.label(v));
  return sub;
}

using BinaryMatrix = std::vector<std::vector<std::uint8_t>>;

inline BinaryMatrix adjacency_matrix(const Digraph& d) {
  BinaryMatrix a(d.order(), std::vector<std::uint8_t>(d.order(), 0));
  for (auto [u, v] : d.edges()) a[u][v] = 1;
  return a;
}

inline unsigned dot(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
  unsigned s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// Decides whether `u_set` is a nontrivial coreset from adjacency rows alone:
/// its rows are nonzero, orthogonal to every other row, and no proper subset
/// has both properties (equivalently, rows inside the set are connected by
/// nonzero dot products).
inline bool matrix_coreset_check(const Digraph& d, const VertexSet& u_set) {
  check_members(d, u_set);
  if (u_set.empty()) throw std::domain_error("matrix coreset check needs a nonempty vertex set");
  const BinaryMatrix a = adjacency_matrix(d);
  const std::vector<std::uint8_t> zero(d.order(), 0);

  for (Vertex u : u_set)
    if (a[u] == zero) return false;
  for (Vertex u : u_set)
    for (Vertex x = 0; x < d.order(); ++x)
      if (!u_set.contains(x) && dot(a[u], a[x]) != 0) return false;

  std::vector<char> reached(u_set.size(), 0);
  std::vector<std::size_t> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < u_set.size(); ++j) {
      if (reached[j] || dot(a[u_set[i]], a[u_set[j]]) == 0) continue;
      reached[j] = 1;
      ++count;
      stack.push_back(j);
    }
  }
  return count == u_set.size();
}

/// Adjacency matrix with rows grouped by U0, U1..Um and columns by
/// alpha(U0), alpha(U1)..alpha(Um). All ones lie in diagonal blocks.
struct BlockedAdjacency {
  std::vector<Vertex> row_order;
  std::vector<Vertex> col_order;
  std::vector<std::size_t> row_block_sizes;
  std::vector<std::size_t> col_block_sizes;
  BinaryMatrix entries;
};

inline BlockedAdjacency blocked_adjacency(const Digraph& d) {
  const CoresetPartition p = coreset_partition(d);
  const std::vector<VertexSet> succ = successor_partition(d, p);
  BlockedAdjacency b;
  b.row_block_sizes.push_back(0);
  for (const auto& cls : p.classes) {
    b.row_order.insert(b.row_order.end(), cls.begin(), cls.end());
    b.row_block_sizes.push_back(cls.size());
  }
  for (const auto& s : succ) {
    b.col_order.insert(b.col_order.end(), s.begin(), s.end());
    b.col_block_sizes.push_back(s.size());
  }
  b.entries.assign(b.row_order.size(), std::vector<std::uint8_t>(b.col_order.size(), 0));
  for (std::size_t r = 0; r < b.row_order.size(); ++r)
    for (std::size_t c = 0; c < b.col_order.size(); ++c)
      b.entries[r][c] = d.has_edge(b.row_order[r], b.col_order[c]) ? 1 : 0;
  return b;
}

}  // namespace coreflex

#endif  // COREFLEX_CORESETS_HPP
