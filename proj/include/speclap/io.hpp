#pragma once

// Edge-list graph files:
//
//   # comment
//   N
//   i j w
//   ...
//
// Node ids are 1-based. Each record sets w_ij = w_ji.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "speclap/error.hpp"
#include "speclap/graph.hpp"

namespace speclap {

namespace detail {

inline std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

inline bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line)) continue;
    std::istringstream fields(line);
    std::string extra;
    if (!(fields >> n) || (fields >> extra) || n < 1) {
      fail(ErrorKind::ParseError, detail::at_line(lineno, "expected a positive node count"));
    }
    break;
  }
  if (n < 1) fail(ErrorKind::ParseError, "missing node count");

  Matrix w = Matrix::Zero(n, n);
  std::set<std::pair<long long, long long>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line)) continue;
    std::istringstream fields(line);
    long long i = 0;
    long long j = 0;
    double weight = 0.0;
    std::string extra;
    if (!(fields >> i >> j >> weight) || (fields >> extra)) {
      fail(ErrorKind::ParseError, detail::at_line(lineno, "expected \"i j w\""));
    }
    if (!std::isfinite(weight)) fail(ErrorKind::ParseError, detail::at_line(lineno, "weight is not finite"));
    if (i < 1 || j < 1 || i > n || j > n) {
      fail(ErrorKind::IndexOutOfRange,
           detail::at_line(lineno, "node id outside 1.." + std::to_string(n)));
    }
    if (i == j) fail(ErrorKind::ParseError, detail::at_line(lineno, "self-loop"));
    if (!seen.emplace(std::min(i, j), std::max(i, j)).second) {
      fail(ErrorKind::DuplicateEdge, detail::at_line(lineno, "edge {" + std::to_string(i) + "," +
                                                                 std::to_string(j) + "} listed twice"));
    }
    w(i - 1, j - 1) = weight;
    w(j - 1, i - 1) = weight;
  }
  return Graph(std::move(w));
}

inline Graph parse_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path.string());
  return parse_graph(in);
}

inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

/// Writes the graph in the edge-list format with round-trip precision.
inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.size() << '\n';
  char buf[40];
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!g.has_edge(i, j)) continue;
      std::snprintf(buf, sizeof buf, "%.17g", g.weight(i, j));
      out << i + 1 << ' ' << j + 1 << ' ' << buf << '\n';
    }
  }
}

}  // namespace speclap
