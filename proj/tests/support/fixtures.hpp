#ifndef COREFLEX_TESTS_FIXTURES_HPP
#define COREFLEX_TESTS_FIXTURES_HPP

#include <string>

#include "coreflex/digraph.hpp"

namespace coreflex::testing {

// Seven-vertex worked example with coresets {x1,x2,x3,x6}, {x4}, {x5}, {x7}.
inline Digraph d1() {
  Digraph d;
  for (int i = 1; i <= 7; ++i) d.add_vertex("x" + std::to_string(i));
  for (auto [t, h] : {std::pair{"x1", "x1"}, {"x1", "x2"}, {"x1", "x4"}, {"x2", "x1"}, {"x3", "x2"}, {"x3", "x3"},
                      {"x4", "x5"}, {"x5", "x6"}, {"x5", "x7"}, {"x6", "x1"}, {"x6", "x2"}})
    d.add_edge(t, h);
  return d;
}

inline Digraph cycle(int n, const std::string& prefix = "") {
  Digraph d;
  for (int i = 0; i < n; ++i) d.add_vertex(prefix + std::string(1, static_cast<char>('a' + i)));
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) d.add_edge(i, (i + 1) % n);
  return d;
}

inline Digraph c3() { return cycle(3); }

// Complete digraph with loops on {1, 2}.
inline Digraph k2_loops() { return make_digraph({{"1", "1"}, {"1", "2"}, {"2", "1"}, {"2", "2"}}); }

inline Digraph path3() { return make_digraph({{"a", "b"}, {"b", "c"}}); }

// u and x share the successor w but only u reaches z.
inline Digraph d_bad() { return make_digraph({{"u", "w"}, {"x", "w"}, {"u", "z"}}); }

inline Digraph edgeless(int n) {
  Digraph d;
  for (int i = 0; i < n; ++i) d.add_vertex(std::string(1, static_cast<char>('a' + i)));
  return d;
}

}  // namespace coreflex::testing

#endif  // COREFLEX_TESTS_FIXTURES_HPP
