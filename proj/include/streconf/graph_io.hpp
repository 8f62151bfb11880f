// Copyright 2026 The streconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text formats for graphs and edge subsets.
//
//   graph file:   "n m" followed by m lines "u v" with 0 <= u < v < n
//   subset file:  one "u v" line per member edge, same rule
//
// Lines starting with '#' are comments; blank lines are ignored.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "streconf/graph.hpp"

namespace streconf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next non-blank, non-comment line; false at end of stream.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
};

inline Edge parse_edge_line(const std::string& line, std::size_t line_no,
                            std::size_t n) {
  std::istringstream ss(line);
  long long u = -1;
  long long v = -1;
  std::string rest;
  if (!(ss >> u >> v) || (ss >> rest)) {
    throw ParseError(line_no, "expected \"u v\"");
  }
  if (u < 0 || v < 0 || u >= static_cast<long long>(n) ||
      v >= static_cast<long long>(n)) {
    throw ParseError(line_no, "node id out of range [0, " + std::to_string(n) +
                                  ")");
  }
  if (u >= v) throw ParseError(line_no, "edge must satisfy u < v");
  return Edge{static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

inline std::vector<Edge> read_edge_lines(LineReader& reader, std::size_t n) {
  std::vector<Edge> edges;
  std::string line;
  while (reader.next(line)) {
    edges.push_back(parse_edge_line(line, reader.line_no, n));
  }
  return edges;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  detail::LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line_no, "missing header");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  std::string rest;
  if (!(header >> n >> m) || (header >> rest) || n < 1 || m < 0) {
    throw ParseError(reader.line_no, "expected header \"n m\" with n >= 1");
  }
  auto edges = detail::read_edge_lines(reader, static_cast<std::size_t>(n));
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(reader.line_no, "header declares " + std::to_string(m) +
                                         " edges, found " +
                                         std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(reader.line_no, e.what());
  }
}

/// Reads an edge subset over [0, n).
inline EdgeSubset read_edge_subset(std::istream& in, std::size_t n) {
  detail::LineReader reader{in};
  auto edges = detail::read_edge_lines(reader, n);
  try {
    return EdgeSubset(n, std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(reader.line_no, e.what());
  }
}

inline void write_graph(std::ostream& out, const Graph& g,
                        std::string_view header_comment = {}) {
  if (!header_comment.empty()) {
    std::istringstream lines{std::string(header_comment)};
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_edge_subset(std::ostream& out, const EdgeSubset& s) {
  for (const Edge& e : s) out << e.u << ' ' << e.v << '\n';
}

}  // namespace streconf
