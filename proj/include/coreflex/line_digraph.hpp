#ifndef COREFLEX_LINE_DIGRAPH_HPP
#define COREFLEX_LINE_DIGRAPH_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreflex/digraph.hpp"

namespace coreflex {

/// L(D): one vertex per edge of `d` (named by edge id, in edge order), with
/// e -> f whenever the head of e is the tail of f.
inline Digraph line_digraph(const MultiDigraph& d) {
  Digraph l;
  std::vector<std::vector<std::size_t>> leaving(d.order());
  for (std::size_t e = 0; e < d.size(); ++e) {
    l.add_vertex(d.arcs()[e].id);
    leaving[d.arcs()[e].tail].push_back(e);
  }
  for (std::size_t e = 0; e < d.size(); ++e)
    for (std::size_t f : leaving[d.arcs()[e].head]) l.add_edge(e, f);
  return l;
}

inline Digraph line_digraph(const Digraph& d) { return line_digraph(MultiDigraph::from(d)); }

/// L^n(D) for n >= 1.
inline Digraph iterated_line_digraph(const MultiDigraph& d, unsigned n) {
  if (n == 0) throw std::domain_error("line digraph order must be at least 1");
  Digraph l = line_digraph(d);
  for (unsigned k = 1; k < n; ++k) l = line_digraph(l);
  return l;
}

/// A vertex of an intersection digraph with its source set and sink set.
template <class T>
struct IntersectionPair {
  std::string label;
  std::vector<T> source_set;
  std::vector<T> sink_set;
};

/// Digraph on the pair labels with u -> v iff source_set(u) meets sink_set(v).
template <class T>
Digraph intersection_digraph(const std::vector<IntersectionPair<T>>& pairs) {
  Digraph d;
  std::vector<std::set<T>> sources;
  std::vector<std::set<T>> sinks;
  for (const auto& p : pairs) {
    if (d.find(p.label)) throw std::domain_error("duplicate intersection-digraph label '" + p.label + "'");
    d.add_vertex(p.label);
    sources.emplace_back(p.source_set.begin(), p.source_set.end());
    sinks.emplace_back(p.sink_set.begin(), p.sink_set.end());
  }
  for (Vertex u = 0; u < pairs.size(); ++u)
    for (Vertex v = 0; v < pairs.size(); ++v) {
      const auto& s = sources[u];
      const auto& t = sinks[v];
      const bool meets = std::any_of(s.begin(), s.end(), [&t](const T& x) { return t.contains(x); });
      if (meets) d.add_edge(u, v);
    }
  return d;
}

}  // namespace coreflex

#endif  // COREFLEX_LINE_DIGRAPH_HPP
