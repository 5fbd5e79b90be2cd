#include <gtest/gtest.h>

#include <random>

#include "coreflex/coreflex.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coreflex;
using namespace coreflex::testing;

namespace {

using LabelledEdges = std::set<std::pair<std::string, std::string>>;

LabelledEdges labelled_edges(const Digraph& d) {
  LabelledEdges out;
  for (auto [u, v] : d.edges()) out.emplace(d.label(u), d.label(v));
  return out;
}

std::size_t max_in_degree(const Digraph& d) {
  std::size_t m = 0;
  for (Vertex v = 0; v < d.order(); ++v) m = std::max(m, d.in_degree(v));
  return m;
}

void expect_sequence_invariants(const Digraph& d, const YSequence& seq) {
  ASSERT_FALSE(seq.stages.empty());
  EXPECT_EQ(seq.fixpoint_index, seq.stages.size() - 1);
  EXPECT_LE(seq.fixpoint_index, d.order());
  EXPECT_EQ(seq.stages.front(), d);
  ASSERT_EQ(seq.membership.size(), seq.stages.size());
  for (std::size_t k = 1; k < seq.stages.size(); ++k) EXPECT_LT(seq.stages[k].order(), seq.stages[k - 1].order());
  for (std::size_t k = 0; k < seq.stages.size(); ++k) {
    // membership at every stage partitions V(D)
    ASSERT_EQ(seq.membership[k].size(), seq.stages[k].order());
    std::vector<int> hits(d.order(), 0);
    for (const auto& s : seq.membership[k])
      for (Vertex v : s) ++hits[v];
    for (int h : hits) EXPECT_EQ(h, 1);
  }
  for (std::size_t k = 1; k < seq.stages.size(); ++k) {
    // composition: a stage-k vertex stands for the union of its stage-(k-1) members
    const CoresetDigraph y = coreset_digraph(seq.stages[k - 1]);
    for (std::size_t i = 0; i < y.members.size(); ++i) {
      std::vector<Vertex> expected;
      for (Vertex w : y.members[i])
        expected.insert(expected.end(), seq.membership[k - 1][w].begin(), seq.membership[k - 1][w].end());
      EXPECT_EQ(seq.membership[k][i], VertexSet(expected));
    }
  }
  const Digraph& f = seq.stages.back();
  const CoresetDigraph yf = coreset_digraph(f);
  EXPECT_EQ(yf.digraph.order(), f.order());
  EXPECT_EQ(yf.digraph.size(), f.size());
  EXPECT_LE(sinks(f).size(), 1u);
  EXPECT_LE(max_in_degree(f), 1u);
}

}  // namespace

TEST(CoresetDigraph, WorkedExample) {
  const Digraph d = d1();
  const CoresetDigraph y = coreset_digraph(d);
  EXPECT_EQ(y.digraph.labels(), (std::vector<std::string>{"U1", "U2", "U3", "U4"}));
  EXPECT_EQ(labelled_edges(y.digraph),
            (LabelledEdges{{"U1", "U1"}, {"U1", "U2"}, {"U2", "U3"}, {"U3", "U1"}, {"U3", "U4"}}));
  ASSERT_EQ(y.members.size(), 4u);
  EXPECT_EQ(labels(d, y.members[0]), (LabelSet{"x1", "x2", "x3", "x6"}));
  EXPECT_EQ(labels(d, y.members[3]), (LabelSet{"x7"}));
}

TEST(CoresetDigraph, EdgelessCollapsesToOneVertex) {
  const CoresetDigraph y = coreset_digraph(edgeless(4));
  EXPECT_EQ(y.digraph.order(), 1u);
  EXPECT_EQ(y.digraph.size(), 0u);
}

TEST(CoresetDigraph, TriangleIsRelabelledTriangle) {
  const CoresetDigraph y = coreset_digraph(c3());
  EXPECT_EQ(labelled_edges(y.digraph), (LabelledEdges{{"U1", "U2"}, {"U2", "U3"}, {"U3", "U1"}}));
}

TEST(CoresetDigraph, EmptyDigraph) {
  EXPECT_EQ(coreset_digraph(Digraph{}).digraph.order(), 0u);
  EXPECT_EQ(complexity_index(Digraph{}), 0u);
}

TEST(CoresetDigraph, EqualsContractionExhaustively) {
  auto check = [](const Digraph& d) {
    const CoresetPartition p = coreset_partition(d);
    std::vector<std::set<std::string>> classes;
    for (const auto& cls : p.classes) classes.push_back(labels(d, cls));
    const auto contracted = contract(d, classes);
    const Digraph y = coreset_digraph(d).digraph;
    std::set<std::pair<std::size_t, std::size_t>> ours;
    for (auto [u, v] : y.edges()) ours.emplace(u, v);
    ASSERT_EQ(y.order(), classes.size());
    ASSERT_EQ(ours, contracted);
  };
  for (unsigned n = 1; n <= 4; ++n) for_each_digraph(n, check);
}

TEST(CoresetDigraph, EqualsIntersectionDigraphOfClasses) {
  std::mt19937 rng(201);
  for (int i = 0; i < 300; ++i) {
    const Digraph d = random_digraph(rng, 8);
    const CoresetPartition p = coreset_partition(d);
    std::vector<IntersectionPair<Vertex>> pairs;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const VertexSet succ = alpha(d, p.classes[k]);
      pairs.push_back({"U" + std::to_string(k + 1), std::vector<Vertex>(succ.begin(), succ.end()),
                       std::vector<Vertex>(p.classes[k].begin(), p.classes[k].end())});
    }
    EXPECT_EQ(intersection_digraph(pairs), coreset_digraph(d, p).digraph);
  }
}

TEST(CoresetDigraph, FixedExactlyWhenAllCoresetsAreSingletons) {
  std::mt19937 rng(211);
  for (int i = 0; i < 500; ++i) {
    // sparse inputs so that fixed digraphs show up often
    const Digraph d = random_digraph(rng, 8, i % 2 ? 0.15 : -1.0);
    const CoresetPartition p = coreset_partition(d);
    bool singletons = true;
    for (const auto& cls : p.classes) singletons = singletons && cls.size() == 1;
    const CoresetDigraph y = coreset_digraph(d, p);
    const bool fixed = y.digraph.order() == d.order();
    EXPECT_EQ(fixed, singletons);
    if (fixed) {
      for (Vertex v = 0; v < d.order(); ++v)
        for (Vertex w = 0; w < d.order(); ++w)
          EXPECT_EQ(d.has_edge(v, w), y.digraph.has_edge(p.class_of[v], p.class_of[w]));
    }
  }
}

TEST(IterateCoresetDigraph, WorkedExampleStages) {
  const Digraph d = d1();
  const YSequence seq = iterate_coreset_digraph(d);
  EXPECT_EQ(seq.fixpoint_index, 3u);
  ASSERT_EQ(seq.stages.size(), 4u);
  EXPECT_EQ(seq.stages[1].order(), 4u);

  const Digraph& y2 = seq.stages[2];
  EXPECT_EQ(y2.order(), 3u);
  EXPECT_EQ(labelled_edges(y2), (LabelledEdges{{"U1", "U1"}, {"U1", "U2"}, {"U2", "U1"}, {"U1", "U3"}}));
  EXPECT_EQ(labels(d, seq.membership[2][0]), (LabelSet{"x1", "x2", "x3", "x5", "x6"}));
  EXPECT_EQ(labels(d, seq.membership[2][1]), (LabelSet{"x4"}));
  EXPECT_EQ(labels(d, seq.membership[2][2]), (LabelSet{"x7"}));

  const Digraph& y3 = seq.stages[3];
  EXPECT_EQ(y3.order(), 2u);
  EXPECT_EQ(labelled_edges(y3), (LabelledEdges{{"U1", "U1"}, {"U1", "U2"}}));
  EXPECT_EQ(coreset_digraph(y3).digraph, y3);
  expect_sequence_invariants(d, seq);
}

TEST(IterateCoresetDigraph, FixedInputsHaveIndexZero) {
  EXPECT_EQ(iterate_coreset_digraph(c3()).fixpoint_index, 0u);
  EXPECT_EQ(iterate_coreset_digraph(path3()).fixpoint_index, 0u);
  EXPECT_EQ(iterate_coreset_digraph(edgeless(1)).fixpoint_index, 0u);
}

TEST(IterateCoresetDigraph, StepBoundIsExplicitError) {
  EXPECT_THROW(iterate_coreset_digraph(d1(), 2), FixpointNotReached);
  EXPECT_NO_THROW(iterate_coreset_digraph(d1(), 3));
  EXPECT_NO_THROW(iterate_coreset_digraph(c3(), 0));
  EXPECT_THROW(iterate_coreset_digraph(k2_loops(), 0), FixpointNotReached);
}

TEST(IterateCoresetDigraph, InvariantsOnRandomCorpus) {
  std::mt19937 rng(223);
  for (int i = 0; i < 500; ++i) {
    const Digraph d = random_digraph(rng, 8);
    expect_sequence_invariants(d, iterate_coreset_digraph(d));
  }
  for (unsigned n = 1; n <= 3; ++n)
    for_each_digraph(n, [](const Digraph& d) { expect_sequence_invariants(d, iterate_coreset_digraph(d)); });
}

TEST(ComplexityIndex, Examples) {
  EXPECT_EQ(complexity_index(d1()), 3u);
  EXPECT_EQ(complexity_index(c3()), 0u);
  EXPECT_EQ(complexity_index(k2_loops()), 1u);
}

TEST(ClassifyFixpoint, Examples) {
  const FixpointShape path = classify_fixpoint(path3());
  EXPECT_EQ(path.kind, FixpointKind::FixedPath);
  EXPECT_EQ(path.tail_length, 2u);

  const FixpointShape lollipop = classify_fixpoint(make_digraph({{"v", "v"}, {"v", "s"}}));
  EXPECT_EQ(lollipop.kind, FixpointKind::FixedCycleWithTail);
  EXPECT_EQ(lollipop.cycle_length, 1u);
  EXPECT_EQ(lollipop.tail_length, 1u);

  EXPECT_EQ(classify_fixpoint(k2_loops()).kind, FixpointKind::NotFixed);
  EXPECT_EQ(classify_fixpoint(d1()).kind, FixpointKind::NotFixed);
}

TEST(ClassifyFixpoint, WorkedExampleLimitIsLollipop) {
  const FixpointShape s = classify_fixpoint(iterate_coreset_digraph(d1()).stages.back());
  EXPECT_EQ(s.kind, FixpointKind::FixedCycleWithTail);
  EXPECT_EQ(s.cycle_length, 1u);
  EXPECT_EQ(s.tail_length, 1u);
}

TEST(ClassifyFixpoint, PureCycleAndSingleVertex) {
  const FixpointShape cyc = classify_fixpoint(cycle(5));
  EXPECT_EQ(cyc.kind, FixpointKind::FixedCycleWithTail);
  EXPECT_EQ(cyc.cycle_length, 5u);
  EXPECT_EQ(cyc.tail_length, 0u);

  const FixpointShape point = classify_fixpoint(edgeless(1));
  EXPECT_EQ(point.kind, FixpointKind::FixedPath);
  EXPECT_EQ(point.tail_length, 0u);

  const FixpointShape tail = classify_fixpoint(make_digraph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}}));
  EXPECT_EQ(tail.kind, FixpointKind::FixedCycleWithTail);
  EXPECT_EQ(tail.cycle_length, 3u);
  EXPECT_EQ(tail.tail_length, 2u);
}

TEST(ClassifyFixpoint, EmptyAndDisconnectedAreNotApplicable) {
  EXPECT_EQ(classify_fixpoint(Digraph{}).kind, FixpointKind::NotApplicable);
  const Digraph two_loops = make_digraph({{"a", "a"}, {"b", "b"}});
  const FixpointShape s = classify_fixpoint(two_loops);
  EXPECT_EQ(s.kind, FixpointKind::NotApplicable);
  EXPECT_FALSE(s.note.empty());
}

TEST(ClassifyFixpoint, EveryConnectedLimitIsClassified) {
  std::mt19937 rng(227);
  for (int i = 0; i < 500; ++i) {
    const Digraph f = iterate_coreset_digraph(random_digraph(rng, 8)).stages.back();
    const FixpointShape s = classify_fixpoint(f);
    EXPECT_NE(s.kind, FixpointKind::NotFixed);
    if (s.kind == FixpointKind::FixedPath) {
      EXPECT_EQ(f.size() + 1, f.order());
    } else if (s.kind == FixpointKind::FixedCycleWithTail) {
      EXPECT_EQ(f.size(), f.order());
      EXPECT_EQ(s.cycle_length + s.tail_length, f.order());
      EXPECT_GE(s.cycle_length, 1u);
    }
  }
}
