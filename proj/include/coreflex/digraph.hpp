#ifndef COREFLEX_DIGRAPH_HPP
#define COREFLEX_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coreflex {

/// Index of a vertex in its host digraph's fixed vertex order.
using Vertex = std::size_t;

using Edge = std::pair<Vertex, Vertex>;

/// A set of vertices of some host digraph, kept sorted by vertex order.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  // Caller guarantees `members` is strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> members) {
    VertexSet s;
    s.members_ = std::move(members);
    return s;
  }

  static VertexSet from_mask(const std::vector<char>& mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < mask.size(); ++v)
      if (mask[v]) members.push_back(v);
    return from_sorted(std::move(members));
  }

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex front() const { return members_.front(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool intersects(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<Vertex> members_;
};

/// Simple directed graph over string-labelled vertices. Loops are allowed,
/// parallel edges are not. Vertex order is insertion order and never changes.
class Digraph {
public:
  Digraph() = default;

  /// Adds a vertex, or returns the existing one with this label.
  Vertex add_vertex(std::string_view label) {
    if (auto found = find(label)) return *found;
    const Vertex v = labels_.size();
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), v);
    succ_.emplace_back();
    pred_.emplace_back();
    return v;
  }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex tail, Vertex head) {
    check(tail);
    check(head);
    auto& out = succ_[tail];
    auto it = std::lower_bound(out.begin(), out.end(), head);
    if (it != out.end() && *it == head) return false;
    out.insert(it, head);
    auto& in = pred_[head];
    in.insert(std::lower_bound(in.begin(), in.end(), tail), tail);
    ++edge_count_;
    return true;
  }

  bool add_edge(std::string_view tail, std::string_view head) {
    const Vertex t = add_vertex(tail);
    const Vertex h = add_vertex(head);
    return add_edge(t, h);
  }

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edge_count_; }

  const std::string& label(Vertex v) const {
    check(v);
    return labels_[v];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Vertex> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex at(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw std::domain_error("unknown vertex label '" + std::string(label) + "'");
  }

  std::span<const Vertex> successors(Vertex v) const {
    check(v);
    return succ_[v];
  }
  std::span<const Vertex> predecessors(Vertex v) const {
    check(v);
    return pred_[v];
  }

  std::size_t out_degree(Vertex v) const { return successors(v).size(); }
  std::size_t in_degree(Vertex v) const { return predecessors(v).size(); }
  bool is_sink(Vertex v) const { return out_degree(v) == 0; }
  bool is_source(Vertex v) const { return in_degree(v) == 0; }

  bool has_edge(Vertex tail, Vertex head) const {
    auto out = successors(tail);
    return std::binary_search(out.begin(), out.end(), head);
  }

  /// All edges, ordered by tail then head in vertex order.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : succ_[u]) result.emplace_back(u, v);
    return result;
  }

  /// Resolves labels to a vertex set; throws std::domain_error on unknown labels.
  VertexSet vertex_set(std::span<const std::string> labels) const {
    std::vector<Vertex> members;
    members.reserve(labels.size());
    for (const auto& l : labels) members.push_back(at(l));
    return VertexSet(std::move(members));
  }
  VertexSet vertex_set(std::initializer_list<std::string_view> labels) const {
    std::vector<Vertex> members;
    for (auto l : labels) members.push_back(at(l));
    return VertexSet(std::move(members));
  }

  std::vector<std::string> labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(label(v));
    return out;
  }

  VertexSet all_vertices() const {
    std::vector<Vertex> all(order());
    for (Vertex v = 0; v < order(); ++v) all[v] = v;
    return VertexSet::from_sorted(std::move(all));
  }

  /// Labelled equality: same vertex order and same edges.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.labels_ == b.labels_ && a.succ_ == b.succ_;
  }

  void check(Vertex v) const {
    if (v >= labels_.size())
      throw std::domain_error("vertex index " + std::to_string(v) + " out of range");
  }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  std::size_t edge_count_ = 0;
};

/// Directed graph with parallel edges, each edge carrying a unique id.
class MultiDigraph {
public:
  struct Arc {
    std::string id;
    Vertex tail;
    Vertex head;
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  Vertex add_vertex(std::string_view label) {
    if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
    const Vertex v = labels_.size();
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), v);
    return v;
  }

  /// Adds an edge. Without an explicit id the edge is named "tail>head:k",
  /// k counting earlier edges with the same endpoints.
  const Arc& add_edge(Vertex tail, Vertex head, std::optional<std::string> id = std::nullopt) {
    check(tail);
    check(head);
    std::size_t& parallel = parallel_[Edge{tail, head}];
    if (!id) id = labels_[tail] + ">" + labels_[head] + ":" + std::to_string(parallel);
    if (!ids_.emplace(*id, arcs_.size()).second)
      throw std::domain_error("duplicate edge id '" + *id + "'");
    ++parallel;
    arcs_.push_back(Arc{std::move(*id), tail, head});
    return arcs_.back();
  }

  const Arc& add_edge(std::string_view tail, std::string_view head,
                      std::optional<std::string> id = std::nullopt) {
    const Vertex t = add_vertex(tail);
    const Vertex h = add_vertex(head);
    return add_edge(t, h, std::move(id));
  }

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return arcs_.size(); }
  const std::string& label(Vertex v) const {
    check(v);
    return labels_[v];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::optional<Vertex> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> find_arc(std::string_view id) const {
    auto it = ids_.find(std::string(id));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t in_degree(Vertex v) const {
    return static_cast<std::size_t>(std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.head == v; }));
  }
  std::size_t out_degree(Vertex v) const {
    return static_cast<std::size_t>(std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.tail == v; }));
  }

  /// Same vertices; one edge per edge of `d`, in Digraph::edges() order.
  static MultiDigraph from(const Digraph& d) {
    MultiDigraph m;
    for (const auto& l : d.labels()) m.add_vertex(l);
    for (auto [u, v] : d.edges()) m.add_edge(u, v);
    return m;
  }

  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    return a.labels_ == b.labels_ && a.arcs_ == b.arcs_;
  }

  void check(Vertex v) const {
    if (v >= labels_.size())
      throw std::domain_error("vertex index " + std::to_string(v) + " out of range");
  }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Arc> arcs_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::map<Edge, std::size_t> parallel_;
};

inline Digraph make_digraph(std::initializer_list<std::pair<std::string_view, std::string_view>> edges) {
  Digraph d;
  for (auto [t, h] : edges) d.add_edge(t, h);
  return d;
}

/// Same vertex order, every edge flipped.
inline Digraph reverse(const Digraph& d) {
  Digraph r;
  for (const auto& l : d.labels()) r.add_vertex(l);
  for (auto [u, v] : d.edges()) r.add_edge(v, u);
  return r;
}

/// Drops parallel edges.
inline Digraph simplify(const MultiDigraph& m) {
  Digraph d;
  for (const auto& l : m.labels()) d.add_vertex(l);
  for (const auto& a : m.arcs()) d.add_edge(a.tail, a.head);
  return d;
}

inline void check_members(const Digraph& d, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= d.order())
    throw std::domain_error("vertex set is not a subset of the digraph's vertices");
}

/// Successors of `s`. By convention alpha of the empty set is the set of sources.
inline VertexSet alpha(const Digraph& d, const VertexSet& s) {
  check_members(d, s);
  std::vector<char> mark(d.order(), 0);
  if (s.empty()) {
    for (Vertex v = 0; v < d.order(); ++v) mark[v] = d.is_source(v);
  } else {
    for (Vertex u : s)
      for (Vertex v : d.successors(u)) mark[v] = 1;
  }
  return VertexSet::from_mask(mark);
}

/// Predecessors of `s`. By convention beta of the empty set is the set of sinks.
inline VertexSet beta(const Digraph& d, const VertexSet& s) {
  check_members(d, s);
  std::vector<char> mark(d.order(), 0);
  if (s.empty()) {
    for (Vertex v = 0; v < d.order(); ++v) mark[v] = d.is_sink(v);
  } else {
    for (Vertex v : s)
      for (Vertex u : d.predecessors(v)) mark[u] = 1;
  }
  return VertexSet::from_mask(mark);
}

inline VertexSet sources(const Digraph& d) { return alpha(d, {}); }
inline VertexSet sinks(const Digraph& d) { return beta(d, {}); }

}  // namespace coreflex

#endif  // COREFLEX_DIGRAPH_HPP
