#ifndef COREFLEX_CORESET_DIGRAPH_HPP
#define COREFLEX_CORESET_DIGRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreflex/coresets.hpp"
#include "coreflex/digraph.hpp"

namespace coreflex {

/// Y(D) together with the D-vertices each of its vertices stands for.
struct CoresetDigraph {
  Digraph digraph;
  std::vector<VertexSet> members;
};

/// Y(D): one vertex "U<i>" per nonempty coreset, in class order, and an edge
/// U_i -> U_j whenever alpha(U_i) meets U_j. The empty class U0 is not a vertex.
inline CoresetDigraph coreset_digraph(const Digraph& d, const CoresetPartition& p) {
  CoresetDigraph y;
  y.members = p.classes;
  for (std::size_t i = 0; i < p.size(); ++i) y.digraph.add_vertex("U" + std::to_string(i + 1));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const VertexSet succ = alpha(d, p.classes[i]);
    for (Vertex v : succ) y.digraph.add_edge(i, p.class_of[v]);
  }
  return y;
}

inline CoresetDigraph coreset_digraph(const Digraph& d) { return coreset_digraph(d, coreset_partition(d)); }

/// D = Y^0, Y^1, ... up to the first stage F with Y(F) = F.
struct YSequence {
  std::vector<Digraph> stages;
  /// Smallest n with Y^n(D) = Y^{n+1}(D); equals stages.size() - 1.
  std::size_t fixpoint_index = 0;
  /// membership[k][v]: the vertices of D represented by vertex v of stage k.
  std::vector<std::vector<VertexSet>> membership;
};

class FixpointNotReached : public std::runtime_error {
public:
  explicit FixpointNotReached(std::size_t steps)
      : std::runtime_error("coreset digraph iteration did not settle within " + std::to_string(steps) + " steps") {}
};

namespace detail {

// Y(F) relabelled through its singleton classes must reproduce F exactly.
inline bool is_labelled_fixpoint(const Digraph& f, const CoresetDigraph& y) {
  if (y.digraph.order() != f.order()) return false;
  std::vector<Vertex> to_f(y.members.size());
  for (std::size_t i = 0; i < y.members.size(); ++i) {
    if (y.members[i].size() != 1) return false;
    to_f[i] = y.members[i].front();
  }
  if (y.digraph.size() != f.size()) return false;
  for (auto [u, v] : y.digraph.edges())
    if (!f.has_edge(to_f[u], to_f[v])) return false;
  return true;
}

}  // namespace detail

/// Iterates Y until the vertex count stops dropping. `max_steps` bounds the
/// fixpoint index and defaults to |V(D)|, which is always sufficient.
inline YSequence iterate_coreset_digraph(const Digraph& d, std::optional<std::size_t> max_steps = std::nullopt) {
  const std::size_t limit = max_steps.value_or(d.order());
  YSequence seq;
  seq.stages.push_back(d);
  std::vector<VertexSet> identity;
  for (Vertex v = 0; v < d.order(); ++v) identity.push_back(VertexSet{v});
  seq.membership.push_back(std::move(identity));

  for (;;) {
    const Digraph& current = seq.stages.back();
    CoresetDigraph next = coreset_digraph(current);
    if (next.digraph.order() == current.order()) {
      if (!detail::is_labelled_fixpoint(current, next))
        throw std::logic_error("coreset digraph kept its order but is not the identity quotient");
      seq.fixpoint_index = seq.stages.size() - 1;
      return seq;
    }
    if (seq.stages.size() > limit) throw FixpointNotReached(limit);

    const auto& previous = seq.membership.back();
    std::vector<VertexSet> composed;
    composed.reserve(next.members.size());
    for (const auto& cls : next.members) {
      std::vector<Vertex> originals;
      for (Vertex v : cls) originals.insert(originals.end(), previous[v].begin(), previous[v].end());
      composed.emplace_back(std::move(originals));
    }
    seq.membership.push_back(std::move(composed));
    seq.stages.push_back(std::move(next.digraph));
  }
}

/// Number of Y applications before the sequence reaches its limit.
inline std::size_t complexity_index(const Digraph& d) { return iterate_coreset_digraph(d).fixpoint_index; }

enum class FixpointKind { FixedPath, FixedCycleWithTail, NotFixed, NotApplicable };

inline const char* to_string(FixpointKind k) {
  switch (k) {
    case FixpointKind::FixedPath: return "fixed path";
    case FixpointKind::FixedCycleWithTail: return "fixed cycle with tail";
    case FixpointKind::NotFixed: return "not fixed";
    case FixpointKind::NotApplicable: return "not applicable";
  }
  return "?";
}

struct FixpointShape {
  FixpointKind kind = FixpointKind::NotApplicable;
  /// Edges on the cycle (FixedCycleWithTail only).
  std::size_t cycle_length = 0;
  /// Edges of the path, or of the tail hanging off the cycle.
  std::size_t tail_length = 0;
  std::string note;
};

/// Classifies digraphs with Y(D) = D: a path, or a cycle with a path attached
/// at its source. Only weakly connected, nonempty inputs are classified.
inline FixpointShape classify_fixpoint(const Digraph& d) {
  FixpointShape shape;
  if (d.order() == 0) {
    shape.note = "empty digraph";
    return shape;
  }
  const CoresetPartition p = coreset_partition(d);
  for (const auto& cls : p.classes)
    if (cls.size() >= 2) {
      shape.kind = FixpointKind::NotFixed;
      shape.note = "coreset {" + [&] {
        std::string s;
        for (Vertex v : cls) s += (s.empty() ? "" : ", ") + d.label(v);
        return s;
      }() + "} has more than one vertex";
      return shape;
    }

  // weak components
  std::vector<Vertex> parent(d.order());
  for (Vertex v = 0; v < d.order(); ++v) parent[v] = v;
  auto root = [&parent](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = d.order();
  for (auto [u, v] : d.edges()) {
    const Vertex a = root(u), b = root(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components > 1) {
    shape.note = std::to_string(components) + " weak components";
    return shape;
  }

  // Every in-degree is at most one here, so a connected digraph has either
  // n-1 edges (a path) or n edges with exactly one cycle.
  if (d.size() + 1 == d.order()) {
    shape.kind = FixpointKind::FixedPath;
    shape.tail_length = d.size();
    return shape;
  }
  Vertex v = 0;
  std::vector<char> seen(d.order(), 0);
  while (!seen[v]) {
    seen[v] = 1;
    v = d.predecessors(v).front();
  }
  std::size_t cycle = 0;
  Vertex w = v;
  do {
    w = d.predecessors(w).front();
    ++cycle;
  } while (w != v);
  shape.kind = FixpointKind::FixedCycleWithTail;
  shape.cycle_length = cycle;
  shape.tail_length = d.order() - cycle;
  return shape;
}

}  // namespace coreflex

#endif  // COREFLEX_CORESET_DIGRAPH_HPP
