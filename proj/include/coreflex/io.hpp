#ifndef COREFLEX_IO_HPP
#define COREFLEX_IO_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coreflex/coresets.hpp"
#include "coreflex/digraph.hpp"

namespace coreflex {

// Edge-list format: one "tail head" pair per line, "node X" declares a
// vertex, '#' starts a comment, labels are whitespace-free tokens. Vertex
// order is first appearance.

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// The parsed contents of an edge-list file, before choosing simple or
/// multi semantics.
struct EdgeListDocument {
  struct Entry {
    std::size_t line;
    std::string tail;
    std::optional<std::string> head;  // empty for "node" declarations
  };
  std::vector<Entry> entries;
};

inline EdgeListDocument parse_edge_list_document(std::string_view text) {
  EdgeListDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() == 2 && tokens[0] == "node") {
      doc.entries.push_back({line_no, tokens[1], std::nullopt});
    } else if (tokens.size() == 2) {
      doc.entries.push_back({line_no, tokens[0], tokens[1]});
    } else {
      throw ParseError(line_no, "expected 'tail head' or 'node label', got " + std::to_string(tokens.size()) +
                                    " token" + (tokens.size() == 1 ? "" : "s"));
    }
  }
  return doc;
}

/// Simple-mode parse; repeated edges collapse, with one warning each.
inline Digraph parse_digraph(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  Digraph d;
  for (const auto& e : parse_edge_list_document(text).entries) {
    if (!e.head) {
      d.add_vertex(e.tail);
      continue;
    }
    if (!d.add_edge(e.tail, *e.head) && warnings)
      warnings->push_back("line " + std::to_string(e.line) + ": duplicate edge " + e.tail + " " + *e.head +
                          " collapsed");
  }
  return d;
}

/// Multi-mode parse; repeated edges become parallel edges.
inline MultiDigraph parse_multidigraph(std::string_view text) {
  MultiDigraph m;
  for (const auto& e : parse_edge_list_document(text).entries) {
    if (!e.head) {
      m.add_vertex(e.tail);
      continue;
    }
    m.add_edge(e.tail, *e.head);
  }
  return m;
}

/// Normalized edge list: every vertex declared with "node" in vertex order,
/// then the edges. Parsing the result reproduces `d` exactly.
inline std::string render_edge_list(const Digraph& d) {
  std::string out;
  for (const auto& l : d.labels()) out += "node " + l + "\n";
  for (auto [u, v] : d.edges()) out += d.label(u) + " " + d.label(v) + "\n";
  return out;
}

inline std::string render_edge_list(const MultiDigraph& m) {
  std::string out;
  for (const auto& l : m.labels()) out += "node " + l + "\n";
  for (const auto& a : m.arcs()) out += m.label(a.tail) + " " + m.label(a.head) + "\n";
  return out;
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

namespace detail {

template <class Graph, class EdgeFn>
std::string render_dot_impl(const Graph& g, const CoresetPartition* partition, EdgeFn&& emit_edges) {
  if (g.order() == 0) return "digraph G { }\n";
  std::string out = "digraph G {\n";
  if (partition) {
    for (std::size_t i = 0; i < partition->size(); ++i) {
      out += "  subgraph cluster_" + std::to_string(i + 1) + " {\n";
      out += "    label=" + dot_quote("U" + std::to_string(i + 1) + (partition->is_trivial(i) ? " (trivial)" : "")) +
             ";\n";
      for (Vertex v : partition->classes[i]) out += "    " + dot_quote(g.label(v)) + ";\n";
      out += "  }\n";
    }
  } else {
    for (const auto& l : g.labels()) out += "  " + dot_quote(l) + ";\n";
  }
  emit_edges(out);
  out += "}\n";
  return out;
}

}  // namespace detail

/// DOT text; with a partition, each class becomes a cluster "U<i>".
inline std::string render_dot(const Digraph& d, const CoresetPartition* partition = nullptr) {
  return detail::render_dot_impl(d, partition, [&d](std::string& out) {
    for (auto [u, v] : d.edges()) out += "  " + dot_quote(d.label(u)) + " -> " + dot_quote(d.label(v)) + ";\n";
  });
}

inline std::string render_dot(const MultiDigraph& m) {
  return detail::render_dot_impl(m, nullptr, [&m](std::string& out) {
    for (const auto& a : m.arcs())
      out += "  " + dot_quote(m.label(a.tail)) + " -> " + dot_quote(m.label(a.head)) + " [label=" + dot_quote(a.id) +
             "];\n";
  });
}

/// "{a, b, c}" in vertex order.
inline std::string format_set(const Digraph& d, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + d.label(s[i]);
  return out + "}";
}

}  // namespace coreflex

#endif  // COREFLEX_IO_HPP
