#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "squarefactor/graph.hpp"

namespace sqf {

// Edge-list text format:
//
//   # comment
//   n m
//   u v      (m lines, 0-based ids)
//
// Lines starting with '#' and blank lines are ignored everywhere.

namespace detail {

inline bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

/// Reads exactly two integers from a line, rejecting trailing garbage.
inline std::optional<std::pair<long long, long long>> parse_pair(const std::string& line) {
  std::istringstream in(line);
  long long a = 0;
  long long b = 0;
  if (!(in >> a >> b)) return std::nullopt;
  std::string rest;
  if (in >> rest) return std::nullopt;
  return std::pair{a, b};
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  long long expected_edges = 0;
  long long seen_edges = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    auto pair = detail::parse_pair(line);
    if (!g) {
      if (!pair) throw ParseError(line_no, "expected header \"n m\"");
      auto [n, m] = *pair;
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      if (n > Graph::kMaxVertices) {
        throw ParseError(line_no, "at most " + std::to_string(Graph::kMaxVertices) + " vertices supported");
      }
      g.emplace(static_cast<int>(n));
      expected_edges = m;
      continue;
    }
    if (!pair) throw ParseError(line_no, "expected edge \"u v\"");
    auto [u, v] = *pair;
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (u == v) throw ParseError(line_no, "self-loop");
    if (g->adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(line_no, "duplicate edge");
    }
    if (++seen_edges > expected_edges) throw ParseError(line_no, "more edges than announced in header");
    g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!g) throw ParseError(line_no, "missing header");
  if (seen_edges != expected_edges) {
    throw ParseError(line_no, "expected " + std::to_string(expected_edges) + " edges, found " +
                                  std::to_string(seen_edges));
  }
  return std::move(*g);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in);
}

/// Canonical form: header, then edges in lexicographic order.
inline void write_graph(std::ostream& out, const Graph& g, const std::string& indent = "") {
  out << indent << g.order() << ' ' << g.size() << '\n';
  for (Edge e : g.edges()) out << indent << e.u << ' ' << e.v << '\n';
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace sqf
