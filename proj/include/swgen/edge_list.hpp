#pragma once

// Plain-text edge list:
//   line 1:  "n m"        node count and arc count (loops counted once)
//   then:    "u v"        one line per undirected edge, 0 <= u < v < n,
//                         lexicographically sorted, (m - n) / 2 lines
// Self-loops are implicit and never listed.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "swgen/error.hpp"
#include "swgen/graph.hpp"

namespace swgen {

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.arc_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace detail {

inline std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(Errc::format, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                                  std::string(token) + "'");
  return value;
}

/// Splits "a b" on the single separating space.
inline std::pair<std::uint64_t, std::uint64_t> parse_pair_line(std::string_view line, std::size_t line_no) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos || line.find(' ', space + 1) != std::string_view::npos)
    throw Error(Errc::format, "line " + std::to_string(line_no) + ": expected two space-separated integers");
  return {parse_count(line.substr(0, space), line_no), parse_count(line.substr(space + 1), line_no)};
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::format, "empty edge list");
  const auto [n, m] = detail::parse_pair_line(line, 1);
  if (n == 0) throw Error(Errc::invalid_size, "header declares zero nodes");
  if (n > UINT32_MAX) throw Error(Errc::format, "header node count too large");
  if (m < n || (m - n) % 2 != 0)
    throw Error(Errc::format, "header arc count " + std::to_string(m) + " inconsistent with " +
                                  std::to_string(n) + " nodes");
  const std::uint64_t expected_edges = (m - n) / 2;
  if (expected_edges > n * (n - 1) / 2) throw Error(Errc::format, "header arc count exceeds the complete graph");

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t seen = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) throw Error(Errc::format, "line " + std::to_string(line_no) + ": blank line");
    const auto [u, v] = detail::parse_pair_line(line, line_no);
    if (u == v) throw Error(Errc::format, "line " + std::to_string(line_no) + ": self-loops are implicit");
    if (u > v) throw Error(Errc::format, "line " + std::to_string(line_no) + ": expected u < v");
    if (v >= n) throw Error(Errc::format, "line " + std::to_string(line_no) + ": node id out of range");
    if (++seen > expected_edges)
      throw Error(Errc::format, "more edge lines than the header's " + std::to_string(expected_edges));
    try {
      g.add_undirected_edge(static_cast<node_t>(u), static_cast<node_t>(v));
    } catch (const Error& e) {
      throw Error(Errc::format, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (seen != expected_edges)
    throw Error(Errc::format, "header promises " + std::to_string(expected_edges) + " edges, found " +
                                  std::to_string(seen));
  return g;
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot open '" + path + "' for writing");
  write_edge_list(out, g);
  if (!out) throw Error(Errc::io, "write to '" + path + "' failed");
}

}  // namespace swgen
