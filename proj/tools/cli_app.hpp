#ifndef COREFLEX_TOOLS_CLI_APP_HPP
#define COREFLEX_TOOLS_CLI_APP_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coreflex/coreflex.hpp"

namespace coreflex::cli {

// sysexits-style codes
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kNoInput = 66;

namespace detail {

struct Options {
  bool dot = false;
  bool multi = false;
  std::string file;
  unsigned power = 1;
  unsigned order = 0;
  bool emit_root = false;
  bool iterate = false;
  bool complexity = false;
  bool blocked = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& file, std::istream& in) {
  if (file == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(file, std::ios::binary);
  if (!f) throw InputError("cannot open '" + file + "'");
  std::string text(std::istreambuf_iterator<char>(f), {});
  if (f.bad()) throw InputError("error reading '" + file + "'");
  return text;
}

inline Digraph load_digraph(const Options& o, std::istream& in, std::ostream& err) {
  if (o.multi) throw UsageError("--multi is only meaningful for 'line'");
  std::vector<std::string> warnings;
  Digraph d = parse_digraph(read_input(o.file, in), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return d;
}

inline void print_coresets(const Digraph& d, std::ostream& out) {
  const CoresetPartition p = coreset_partition(d);
  const auto succ = successor_partition(d, p);
  out << "coresets:\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << "  U" << i + 1 << " = " << format_set(d, p.classes[i]) << (p.is_trivial(i) ? " (trivial)" : "") << "\n";
  out << "successor sets:\n";
  out << "  alpha(U0) = " << format_set(d, succ[0]) << " (sources)\n";
  for (std::size_t i = 1; i < succ.size(); ++i) out << "  alpha(U" << i << ") = " << format_set(d, succ[i]) << "\n";
}

inline int cmd_coresets(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Digraph d = load_digraph(o, in, err);
  if (o.dot) {
    const CoresetPartition p = coreset_partition(d);
    out << render_dot(d, &p);
  } else {
    print_coresets(d, out);
  }
  return kYes;
}

inline int cmd_decompose(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Digraph d = load_digraph(o, in, err);
  const CoreDecomposition dec = core_decomposition(d);
  if (o.dot) {
    if (d.order() == 0) {
      out << "digraph G { }\n";
      return kYes;
    }
    out << "digraph G {\n";
    for (const auto& l : d.labels()) out << "  " << dot_quote(l) << ";\n";
    for (std::size_t i = 0; i < dec.parts.size(); ++i)
      for (auto [u, v] : dec.parts[i].edges)
        out << "  " << dot_quote(d.label(u)) << " -> " << dot_quote(d.label(v)) << " [label="
            << dot_quote("D" + std::to_string(i)) << "];\n";
    out << "}\n";
    return kYes;
  }
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const auto& part = dec.parts[i];
    out << "D" << i << ": " << format_set(d, part.coreset) << " -> " << format_set(d, part.successors) << ", "
        << part.edges.size() << " edge" << (part.edges.size() == 1 ? "" : "s") << "\n";
    for (auto [u, v] : part.edges) out << "  " << d.label(u) << " " << d.label(v) << "\n";
  }
  return kYes;
}

inline int cmd_line(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Digraph l;
  if (o.multi) {
    l = line_digraph(parse_multidigraph(read_input(o.file, in)));
  } else {
    l = line_digraph(load_digraph(o, in, err));
  }
  out << (o.dot ? render_dot(l) : render_edge_list(l));
  return kYes;
}

inline void print_root(const MultiDigraph& root, std::ostream& out) {
  for (const auto& a : root.arcs()) out << "  " << a.id << ": " << root.label(a.tail) << " -> " << root.label(a.head) << "\n";
}

inline int cmd_is_line(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Digraph d = load_digraph(o, in, err);

  if (o.order >= 1) {
    NthOrderReport report;
    try {
      report = is_nth_order_line_digraph(d, o.order);
    } catch (const std::domain_error& e) {
      err << "precondition violated: " << e.what() << " (order tests need a digraph without sources or sinks)\n";
      return kPrecondition;
    }
    if (o.emit_root) {
      if (report.is_nth_order_line) {
        const MultiDigraph root = root_digraph(d);
        out << (o.dot ? render_dot(root) : render_edge_list(root));
      }
      return report.is_nth_order_line ? kYes : kNo;
    }
    for (const auto& check : report.per_order) {
      out << "order " << check.order << ": ";
      if (check.passed) {
        out << "pass (" << check.coresets.size() << " coreset" << (check.coresets.size() == 1 ? "" : "s") << ")\n";
      } else {
        const auto& v = *check.violation;
        out << "fail: coreset " << format_set(d, v.coreset) << " has " << to_string(v.count) << " walks of length "
            << check.order << " from " << d.label(v.from) << " to " << d.label(v.to) << "\n";
      }
    }
    out << "line digraph of order " << o.order << ": " << (report.is_nth_order_line ? "yes" : "no") << "\n";
    return report.is_nth_order_line ? kYes : kNo;
  }

  const LineRecognitionResult r = is_line_digraph(d);
  if (o.emit_root) {
    if (r.is_line) out << (o.dot ? render_dot(*r.root) : render_edge_list(*r.root));
    else
      out << "# not a line digraph\n";
    return r.is_line ? kYes : kNo;
  }
  if (!r.is_line) {
    const auto& c = *r.counterexample;
    out << "line digraph: no\n";
    out << "coreset " << format_set(d, c.coreset) << ": alpha(" << d.label(c.u) << ") = " << format_set(d, alpha(d, {c.u}))
        << " but alpha(" << d.label(c.x) << ") = " << format_set(d, alpha(d, {c.x})) << "\n";
    return kNo;
  }
  out << "line digraph: yes\n";
  out << "partitions:\n";
  for (std::size_t i = 0; i < r.partitions->tails.size(); ++i)
    out << "  A" << i << " = " << format_set(d, r.partitions->tails[i]) << "  B" << i << " = "
        << format_set(d, r.partitions->heads[i]) << "\n";
  out << "root:\n";
  print_root(*r.root, out);
  return kYes;
}

inline int cmd_power(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.power == 0) throw UsageError("power must be at least 1");
  const Digraph p = power_digraph(load_digraph(o, in, err), o.power);
  out << (o.dot ? render_dot(p) : render_edge_list(p));
  return kYes;
}

inline void print_stage(const Digraph& stage, const std::vector<VertexSet>& members, const Digraph& original,
                        std::ostream& out) {
  for (Vertex v = 0; v < stage.order(); ++v) out << "  " << stage.label(v) << " = " << format_set(original, members[v]) << "\n";
  for (auto [u, v] : stage.edges()) out << "  " << stage.label(u) << " -> " << stage.label(v) << "\n";
}

inline int cmd_core_digraph(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Digraph d = load_digraph(o, in, err);
  if (!o.iterate) {
    const CoresetDigraph y = coreset_digraph(d);
    if (o.dot) {
      out << render_dot(y.digraph);
    } else {
      out << "coreset digraph (" << y.digraph.order() << " vertices, " << y.digraph.size() << " edges):\n";
      print_stage(y.digraph, y.members, d, out);
    }
    if (o.complexity && !o.dot) out << "complexity = " << complexity_index(d) << "\n";
    return kYes;
  }

  const YSequence seq = iterate_coreset_digraph(d);
  for (std::size_t k = 0; k < seq.stages.size(); ++k) {
    if (o.dot) {
      std::string text = render_dot(seq.stages[k]);
      text.replace(0, std::string("digraph G").size(), "digraph Y" + std::to_string(k));
      out << text;
      continue;
    }
    out << "stage " << k << " (" << seq.stages[k].order() << " vertices, " << seq.stages[k].size() << " edges)"
        << (k == 0 ? " input" : "") << ":\n";
    if (k > 0) print_stage(seq.stages[k], seq.membership[k], d, out);
  }
  if (!o.dot) {
    const FixpointShape shape = classify_fixpoint(seq.stages.back());
    out << "limit: " << to_string(shape.kind);
    if (shape.kind == FixpointKind::FixedPath) out << " (length " << shape.tail_length << ")";
    if (shape.kind == FixpointKind::FixedCycleWithTail)
      out << " (cycle " << shape.cycle_length << ", tail " << shape.tail_length << ")";
    if (!shape.note.empty()) out << " (" << shape.note << ")";
    out << "\n";
    if (o.complexity) out << "complexity = " << seq.fixpoint_index << "\n";
  }
  return kYes;
}

inline int cmd_matrix(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Digraph d = load_digraph(o, in, err);
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  BinaryMatrix m;
  BlockedAdjacency b;
  if (o.blocked) {
    b = blocked_adjacency(d);
    rows = b.row_order;
    cols = b.col_order;
    m = b.entries;
  } else {
    rows = cols = d.all_vertices().members();
    m = adjacency_matrix(d);
  }
  out << "# rows:";
  for (Vertex v : rows) out << " " << d.label(v);
  out << " | cols:";
  for (Vertex v : cols) out << " " << d.label(v);
  out << "\n";
  if (o.blocked) {
    out << "# row blocks:";
    for (auto s : b.row_block_sizes) out << " " << s;
    out << " | col blocks:";
    for (auto s : b.col_block_sizes) out << " " << s;
    out << "\n";
  }
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << int(row[j]);
    out << "\n";
  }
  return kYes;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Coreset analysis of directed graphs", "coreflex"};
  app.require_subcommand(1);
  app.add_flag("--dot", o.dot, "Write DOT instead of text");
  app.add_flag("--multi", o.multi, "Keep repeated edges as parallel edges (line only)");

  auto file_arg = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "Edge-list file, or - for stdin")->required();
    sub->fallthrough();
  };
  auto* coresets = app.add_subcommand("coresets", "Print the coreset and successor partitions");
  file_arg(coresets);
  auto* decompose = app.add_subcommand("decompose", "Print the core subgraphs");
  file_arg(decompose);
  auto* line = app.add_subcommand("line", "Emit the line digraph");
  file_arg(line);
  auto* is_line = app.add_subcommand("is-line", "Recognize line digraphs");
  is_line->add_option("--order", o.order, "Test for an nth-order line digraph (no sources or sinks)");
  is_line->add_flag("--emit-root", o.emit_root, "Print only the root multidigraph");
  file_arg(is_line);
  auto* power = app.add_subcommand("power", "Emit D^N");
  power->add_option("N", o.power, "Walk length")->required();
  file_arg(power);
  auto* core = app.add_subcommand("core-digraph", "Coreset digraph Y(D)");
  core->add_flag("--iterate", o.iterate, "Iterate Y to its limit");
  core->add_flag("--complexity", o.complexity, "Report the convergence index");
  file_arg(core);
  auto* matrix = app.add_subcommand("matrix", "Print the adjacency matrix");
  matrix->add_flag("--blocked", o.blocked, "Group rows by coresets and columns by successor sets");
  file_arg(matrix);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (coresets->parsed()) return detail::cmd_coresets(o, in, out, err);
    if (decompose->parsed()) return detail::cmd_decompose(o, in, out, err);
    if (line->parsed()) return detail::cmd_line(o, in, out, err);
    if (is_line->parsed()) return detail::cmd_is_line(o, in, out, err);
    if (power->parsed()) return detail::cmd_power(o, in, out, err);
    if (core->parsed()) return detail::cmd_core_digraph(o, in, out, err);
    if (matrix->parsed()) return detail::cmd_matrix(o, in, out, err);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const detail::InputError& e) {
    err << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const ParseError& e) {
    err << "error: " << o.file << ": " << e.what() << "\n";
    return kDataError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace coreflex::cli

#endif  // COREFLEX_TOOLS_CLI_APP_HPP
