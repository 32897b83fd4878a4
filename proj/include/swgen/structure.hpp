#pragma once

// Structural metrics on a Graph: components, BFS distances, diameter,
// average path length, local clustering and global transitivity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "swgen/error.hpp"
#include "swgen/graph.hpp"
#include "swgen/parallel.hpp"

namespace swgen {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct ComponentLabeling {
  std::vector<std::uint32_t> component_of;  // per node
  std::vector<std::size_t> sizes;           // per component id
  std::uint32_t largest = 0;

  std::size_t count() const noexcept { return sizes.size(); }
};

/// Component ids are assigned in order of each component's smallest node, so
/// the labeling is deterministic. Among equally large components the smallest
/// id is reported as largest.
inline ComponentLabeling connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  ComponentLabeling out;
  out.component_of.assign(n, kUnreachable);
  std::vector<node_t> queue;
  queue.reserve(n);
  for (node_t root = 0; root < n; ++root) {
    if (out.component_of[root] != kUnreachable) continue;
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    queue.clear();
    queue.push_back(root);
    out.component_of[root] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (node_t v : g.neighbors(queue[head])) {
        if (out.component_of[v] == kUnreachable) {
          out.component_of[v] = id;
          queue.push_back(v);
        }
      }
    }
    out.sizes.push_back(queue.size());
    if (queue.size() > out.sizes[out.largest]) out.largest = id;
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count() == 1; }

struct Subgraph {
  Graph graph;
  std::vector<std::uint32_t> old_to_new;  // kUnreachable for dropped nodes
  std::vector<node_t> new_to_old;
};

/// Induced subgraph on the largest component; surviving nodes keep their
/// relative order.
inline Subgraph largest_component_subgraph(const Graph& g) {
  const auto labels = connected_components(g);
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> old_to_new(n, kUnreachable);
  std::vector<node_t> new_to_old;
  new_to_old.reserve(labels.sizes[labels.largest]);
  for (node_t u = 0; u < n; ++u) {
    if (labels.component_of[u] == labels.largest) {
      old_to_new[u] = static_cast<std::uint32_t>(new_to_old.size());
      new_to_old.push_back(u);
    }
  }
  std::vector<Edge> edges;
  for (node_t u : new_to_old)
    for (node_t v : g.neighbors(u))
      if (u < v) edges.emplace_back(old_to_new[u], old_to_new[v]);
  return {Graph::from_edges(new_to_old.size(), edges), std::move(old_to_new), std::move(new_to_old)};
}

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, node_t source) {
  if (source >= g.node_count())
    throw Error(Errc::index, "source " + std::to_string(source) + " out of range");
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<node_t> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const node_t u = queue[head];
    for (node_t v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

struct PathStatistics {
  std::uint32_t diameter = 0;
  double average_path_length = 0.0;  // over unordered distinct pairs
};

/// Exact all-sources BFS. A single-node graph has diameter 0 and average
/// path length 0 (no pairs).
inline PathStatistics path_statistics(const Graph& g, Threads threads = {}) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> eccentricity(n, 0);
  std::vector<std::uint64_t> distance_sum(n, 0);
  std::vector<std::uint8_t> disconnected(n, 0);
  parallel_for(n, threads, [&](std::size_t s) {
    const auto dist = bfs_distances(g, static_cast<node_t>(s));
    std::uint32_t ecc = 0;
    std::uint64_t sum = 0;
    for (auto d : dist) {
      if (d == kUnreachable) {
        disconnected[s] = 1;
        return;
      }
      ecc = std::max(ecc, d);
      sum += d;
    }
    eccentricity[s] = ecc;
    distance_sum[s] = sum;
  });
  if (std::any_of(disconnected.begin(), disconnected.end(), [](auto f) { return f != 0; }))
    throw Error(Errc::not_connected, "path statistics need a connected graph");

  PathStatistics out;
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < n; ++s) {
    out.diameter = std::max(out.diameter, eccentricity[s]);
    total += distance_sum[s];
  }
  if (n > 1)
    out.average_path_length = static_cast<double>(total) / (static_cast<double>(n) * static_cast<double>(n - 1));
  return out;
}

inline std::uint32_t diameter(const Graph& g, Threads threads = {}) {
  return path_statistics(g, threads).diameter;
}

inline double average_path_length(const Graph& g, Threads threads = {}) {
  return path_statistics(g, threads).average_path_length;
}

/// Mean local clustering over nodes with at least two non-loop neighbors;
/// 0 when no node qualifies.
inline double clustering_coefficient(const Graph& g) {
  const std::size_t n = g.node_count();
  double sum = 0.0;
  std::size_t qualifying = 0;
  for (node_t u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    const std::size_t k = nu.size();
    if (k < 2) continue;
    std::size_t links = 0;  // each neighbor-neighbor edge counted twice
    for (node_t a : nu) {
      const auto na = g.neighbors(a);
      auto i = nu.begin();
      auto j = na.begin();
      while (i != nu.end() && j != na.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++links;
          ++i;
          ++j;
        }
      }
    }
    sum += static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
    ++qualifying;
  }
  return qualifying == 0 ? 0.0 : sum / static_cast<double>(qualifying);
}

/// Global transitivity: closed connected triples over all connected triples,
/// i.e. the probability that two distinct neighbors of a node picked through
/// a uniformly random triple are adjacent. 0 when there is no triple.
inline double transitivity(const Graph& g) {
  const std::size_t n = g.node_count();
  std::uint64_t closed = 0;  // each triangle seen 6 times
  std::uint64_t triples = 0;  // ordered neighbor pairs, each triple seen twice
  for (node_t u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    const auto k = static_cast<std::uint64_t>(nu.size());
    triples += k * (k > 0 ? k - 1 : 0);
    for (node_t a : nu) {
      const auto na = g.neighbors(a);
      auto i = nu.begin();
      auto j = na.begin();
      while (i != nu.end() && j != na.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++closed;
          ++i;
          ++j;
        }
      }
    }
  }
  return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

}  // namespace swgen
