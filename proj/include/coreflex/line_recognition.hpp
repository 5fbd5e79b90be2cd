#ifndef COREFLEX_LINE_RECOGNITION_HPP
#define COREFLEX_LINE_RECOGNITION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coreflex/coresets.hpp"
#include "coreflex/digraph.hpp"
#include "coreflex/line_digraph.hpp"
#include "coreflex/walks.hpp"

namespace coreflex {

/// Two vertices of one coreset with different successor sets.
struct LineCounterexample {
  VertexSet coreset;
  Vertex u = 0;
  Vertex x = 0;
};

/// Aligned partitions with E(D) = union of tails[i] x heads[i]. Slot 0 is
/// the empty tail set paired with the sources.
struct GellerHararyPartitions {
  std::vector<VertexSet> tails;
  std::vector<VertexSet> heads;
};

struct LineRecognitionResult {
  bool is_line = false;
  std::optional<GellerHararyPartitions> partitions;
  std::optional<MultiDigraph> root;
  std::optional<LineCounterexample> counterexample;
};

class NotLineDigraph : public std::domain_error {
public:
  explicit NotLineDigraph(LineCounterexample c)
      : std::domain_error("digraph is not a line digraph"), counterexample_(std::move(c)) {}
  const LineCounterexample& counterexample() const { return counterexample_; }

private:
  LineCounterexample counterexample_;
};

namespace detail {

// First coreset (in class order) holding two vertices with different
// successor sets; the pair is its first member and the first member that
// disagrees with it.
inline std::optional<LineCounterexample> successor_mismatch(const Digraph& d, const CoresetPartition& p) {
  for (const auto& cls : p.classes) {
    const Vertex first = cls.front();
    const auto first_succ = d.successors(first);
    for (Vertex x : cls) {
      const auto succ = d.successors(x);
      if (!std::equal(first_succ.begin(), first_succ.end(), succ.begin(), succ.end()))
        return LineCounterexample{cls, first, x};
    }
  }
  return std::nullopt;
}

// For every edge uv, the predecessors of v must be exactly u's coreset.
inline void assert_predecessor_condition(const Digraph& d, const CoresetPartition& p) {
  for (auto [u, v] : d.edges()) {
    const auto pred = d.predecessors(v);
    const auto& cls = p.classes[p.class_of[u]];
    if (!std::equal(pred.begin(), pred.end(), cls.begin(), cls.end()))
      throw std::logic_error("predecessor set of '" + d.label(v) + "' is not the coreset of '" + d.label(u) + "'");
  }
}

inline GellerHararyPartitions partitions_from(const CoresetPartition& p, std::vector<VertexSet> succ) {
  GellerHararyPartitions gh;
  gh.tails.push_back(VertexSet{});
  gh.tails.insert(gh.tails.end(), p.classes.begin(), p.classes.end());
  gh.heads = std::move(succ);
  return gh;
}

// Vertices w0..wm, one per slot of the extended coreset partition. Vertex v
// of D becomes the edge w_i -> w_j where v lies in alpha(U_i) and in U_j.
inline MultiDigraph root_from(const Digraph& d, const CoresetPartition& p, const std::vector<VertexSet>& succ) {
  MultiDigraph root;
  for (std::size_t i = 0; i <= p.size(); ++i) root.add_vertex("w" + std::to_string(i));
  std::vector<std::size_t> succ_slot(d.order(), 0);
  for (std::size_t i = 0; i < succ.size(); ++i)
    for (Vertex v : succ[i]) succ_slot[v] = i;
  for (Vertex v = 0; v < d.order(); ++v) root.add_edge(succ_slot[v], p.class_of[v] + 1, d.label(v));
  return root;
}

}  // namespace detail

/// Recognizes line digraphs by checking that every coreset's members share
/// one successor set. Positive answers carry the aligned partitions and a
/// root multidigraph; negative answers carry the offending coreset and pair.
inline LineRecognitionResult is_line_digraph(const Digraph& d) {
  const CoresetPartition p = coreset_partition(d);
  LineRecognitionResult result;
  if (auto bad = detail::successor_mismatch(d, p)) {
    result.counterexample = std::move(bad);
    return result;
  }
  detail::assert_predecessor_condition(d, p);
  auto succ = successor_partition(d, p);
  result.is_line = true;
  result.root = detail::root_from(d, p, succ);
  result.partitions = detail::partitions_from(p, std::move(succ));
  return result;
}

inline GellerHararyPartitions geller_harary_partitions(const Digraph& d) {
  LineRecognitionResult r = is_line_digraph(d);
  if (!r.is_line) throw NotLineDigraph(*r.counterexample);
  return std::move(*r.partitions);
}

inline MultiDigraph root_digraph(const Digraph& d) {
  LineRecognitionResult r = is_line_digraph(d);
  if (!r.is_line) throw NotLineDigraph(*r.counterexample);
  return std::move(*r.root);
}

/// Every two rows of the adjacency matrix are identical or orthogonal, and
/// likewise every two columns.
inline bool richards_check(const Digraph& d) {
  const BinaryMatrix a = adjacency_matrix(d);
  BinaryMatrix t(d.order(), std::vector<std::uint8_t>(d.order(), 0));
  for (std::size_t i = 0; i < d.order(); ++i)
    for (std::size_t j = 0; j < d.order(); ++j) t[j][i] = a[i][j];
  auto rows_ok = [](const BinaryMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (m[i] != m[j] && dot(m[i], m[j]) != 0) return false;
    return true;
  };
  return rows_ok(a) && rows_ok(t);
}

inline void require_no_sources_or_sinks(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.is_source(v)) throw std::domain_error("vertex '" + d.label(v) + "' is a source");
    if (d.is_sink(v)) throw std::domain_error("vertex '" + d.label(v) + "' is a sink");
  }
}

/// Coresets of D^n, for digraphs without sources or sinks.
inline CoresetPartition nth_order_coresets(const Digraph& d, unsigned n) {
  if (n == 0) throw std::domain_error("coreset order must be at least 1");
  require_no_sources_or_sinks(d);
  return coreset_partition(power_digraph(d, n));
}

struct UniquenessViolation {
  VertexSet coreset;
  Vertex from = 0;
  Vertex to = 0;
  WalkCount count = WalkCount::Zero;
};

/// Outcome of the i-uniqueness test at one order.
struct UniquenessCheck {
  unsigned order = 0;
  CoresetPartition coresets;
  bool passed = false;
  std::optional<UniquenessViolation> violation;
};

/// Checks that for every ith-order coreset U there is exactly one i-walk from
/// each vertex of U to each vertex of alpha^i(U).
inline UniquenessCheck i_uniqueness(const Digraph& d, unsigned i) {
  if (i == 0) throw std::domain_error("uniqueness order must be at least 1");
  require_no_sources_or_sinks(d);
  const Digraph power = power_digraph(d, i);
  const SaturatingCountMatrix counts = walk_counts(d, i);

  UniquenessCheck check;
  check.order = i;
  check.coresets = coreset_partition(power);
  check.passed = true;
  for (const auto& cls : check.coresets.classes) {
    const VertexSet reach = alpha(power, cls);
    for (Vertex u : cls)
      for (Vertex w : reach)
        if (counts.at(u, w) != WalkCount::One) {
          check.passed = false;
          check.violation = UniquenessViolation{cls, u, w, counts.at(u, w)};
          return check;
        }
  }
  return check;
}

struct NthOrderReport {
  unsigned n = 0;
  std::vector<UniquenessCheck> per_order;
  bool is_nth_order_line = false;
};

/// Decides whether a digraph without sources or sinks is L^n of some
/// digraph, by the uniqueness test at every order 1..n.
inline NthOrderReport is_nth_order_line_digraph(const Digraph& d, unsigned n) {
  if (n == 0) throw std::domain_error("line digraph order must be at least 1");
  require_no_sources_or_sinks(d);
  NthOrderReport report;
  report.n = n;
  report.is_nth_order_line = true;
  for (unsigned i = 1; i <= n; ++i) {
    report.per_order.push_back(i_uniqueness(d, i));
    report.is_nth_order_line = report.is_nth_order_line && report.per_order.back().passed;
  }
  return report;
}

/// The edges of D with heads in `u_set`, as a vertex set of line_digraph(d).
inline VertexSet lift_coreset(const Digraph& d, const VertexSet& u_set) {
  check_members(d, u_set);
  require_no_sources_or_sinks(d);
  // line_digraph(d) numbers its vertices in Digraph::edges() order
  std::vector<Vertex> lifted;
  Vertex index = 0;
  for (auto [tail, head] : d.edges()) {
    if (u_set.contains(head)) lifted.push_back(index);
    ++index;
  }
  return VertexSet::from_sorted(std::move(lifted));
}

}  // namespace coreflex

#endif  // COREFLEX_LINE_RECOGNITION_HPP
