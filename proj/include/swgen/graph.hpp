#pragma once

// Reflexive, symmetric graph with implicit self-loops.
//
// Arc convention: arc_count() = n + 2 * (undirected non-loop edges), i.e. each
// implicit loop counts one arc and each undirected edge counts two. degree()
// includes the loop, nonloop_degree() does not.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swgen/error.hpp"

namespace swgen {

using node_t = std::uint32_t;
using Edge = std::pair<node_t, node_t>;

class Graph {
 public:
  explicit Graph(std::size_t node_count) {
    if (node_count == 0) throw Error(Errc::invalid_size, "graph must have at least one node");
    if (node_count > static_cast<std::size_t>(UINT32_MAX))
      throw Error(Errc::invalid_size, "node count exceeds 32-bit node ids");
    adjacency_.resize(node_count);
  }

  /// Builds a graph from undirected edges given in any order and orientation.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges) {
    Graph g(node_count);
    std::vector<Edge> canonical;
    canonical.reserve(edges.size());
    for (auto [u, v] : edges) {
      g.check_node(u);
      g.check_node(v);
      if (u == v) throw Error(Errc::loop_insert, "self-loops are implicit: " + std::to_string(u));
      canonical.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canonical.begin(), canonical.end());
    if (auto dup = std::adjacent_find(canonical.begin(), canonical.end()); dup != canonical.end())
      throw Error(Errc::duplicate_edge,
                  "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    // With (u,v) sorted and u<v, every node receives its lower neighbors
    // (ascending) before its higher ones (ascending): lists come out sorted.
    for (auto [u, v] : canonical) {
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    g.edge_count_ = canonical.size();
    return g;
  }

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::uint64_t arc_count() const noexcept {
    return static_cast<std::uint64_t>(adjacency_.size()) + 2 * static_cast<std::uint64_t>(edge_count_);
  }

  std::size_t degree(node_t u) const { return nonloop_degree(u) + 1; }
  std::size_t nonloop_degree(node_t u) const {
    check_node(u);
    return adjacency_[u].size();
  }

  /// Sorted non-loop neighbors.
  std::span<const node_t> neighbors(node_t u) const {
    check_node(u);
    return adjacency_[u];
  }

  bool has_edge(node_t u, node_t v) const {
    check_node(u);
    check_node(v);
    if (u == v) return true;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  void add_undirected_edge(node_t u, node_t v) {
    check_node(u);
    check_node(v);
    if (u == v) throw Error(Errc::loop_insert, "self-loops are implicit: " + std::to_string(u));
    auto& from_u = adjacency_[u];
    auto pos_u = std::lower_bound(from_u.begin(), from_u.end(), v);
    if (pos_u != from_u.end() && *pos_u == v)
      throw Error(Errc::duplicate_edge,
                  "edge (" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + ")");
    from_u.insert(pos_u, v);
    auto& from_v = adjacency_[v];
    from_v.insert(std::lower_bound(from_v.begin(), from_v.end(), u), u);
    ++edge_count_;
  }

  /// Undirected non-loop edges as (u,v), u<v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (node_t u = 0; u < adjacency_.size(); ++u)
      for (node_t v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(node_t u) const {
    if (u >= adjacency_.size())
      throw Error(Errc::index, "node " + std::to_string(u) + " out of range [0," +
                                   std::to_string(adjacency_.size()) + ")");
  }

  std::vector<std::vector<node_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace swgen
