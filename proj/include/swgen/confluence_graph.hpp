#pragma once

// Strong confluence graph extraction.
//
// Every unordered pair {u,v} is scored by its mutual confluence
// max(([G]^t)_{u,v}, ([G]^t)_{v,u}) on the input graph; the output keeps the
// implicit loops plus the (m - n) / 2 best pairs. Because [G]^t is fixed while
// pairs are picked, picking the best remaining pair one at a time is the same
// as taking the top of a single ranking, which is what this does.
//
// Ranking key: scores are compared after rounding to a grid of 2^-44. Pairs
// whose confluences are mathematically equal (graph automorphisms) can come
// out of floating-point propagation a few ulps apart; the grid makes them tie
// and the tie is broken by lexicographic (u,v).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "swgen/error.hpp"
#include "swgen/graph.hpp"
#include "swgen/parallel.hpp"
#include "swgen/random_walk.hpp"

namespace swgen {

/// n x n row-major matrix of t-step transition probabilities, row u = walk
/// from u. Rows can be advanced in place one step at a time.
class WalkMatrix {
 public:
  WalkMatrix(const Graph& g, std::size_t t, Threads threads = {}) : n_(g.node_count()), data_(n_ * n_, 0.0) {
    detail::check_walk_length(t);
    for (std::size_t u = 0; u < n_; ++u) data_[u * n_ + u] = 1.0;
    advance(g, t, threads);
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t steps() const noexcept { return steps_; }

  double at(node_t u, node_t v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const double> row(node_t u) const {
    return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

  /// Moves every row forward by `extra` steps on g.
  void advance(const Graph& g, std::size_t extra, Threads threads = {}) {
    if (g.node_count() != n_) throw Error(Errc::dimension, "walk matrix and graph sizes differ");
    if (extra == 0) return;
    parallel_for(n_, threads, [&](std::size_t u) {
      std::vector<double> next(n_);
      std::vector<double> scaled(n_);
      std::span<double> current(data_.data() + u * n_, n_);
      for (std::size_t i = 0; i < extra; ++i) {
        detail::step_into(g, current, next, scaled);
        std::copy(next.begin(), next.end(), current.begin());
      }
    });
    steps_ += extra;
  }

 private:
  std::size_t n_;
  std::size_t steps_ = 0;
  std::vector<double> data_;
};

inline WalkMatrix all_pairs_walk_matrix(const Graph& g, std::size_t t, Threads threads = {}) {
  return WalkMatrix(g, t, threads);
}

struct ScoredPair {
  node_t u = 0;
  node_t v = 0;  // u < v
  double score = 0.0;

  friend bool operator==(const ScoredPair&, const ScoredPair&) = default;
};

inline std::int64_t confluence_key(double score) { return std::llround(std::ldexp(score, 44)); }

/// True when a ranks strictly before b.
inline bool ranks_before(const ScoredPair& a, const ScoredPair& b) {
  const auto ka = confluence_key(a.score);
  const auto kb = confluence_key(b.score);
  if (ka != kb) return ka > kb;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

namespace detail {

template <typename Exclude>
std::vector<ScoredPair> score_pairs(const WalkMatrix& w, Exclude&& excluded) {
  const std::size_t n = w.size();
  std::vector<ScoredPair> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (node_t u = 0; u < n; ++u)
    for (node_t v = u + 1; v < n; ++v)
      if (!excluded(u, v)) pairs.push_back({u, v, std::max(w.at(u, v), w.at(v, u))});
  return pairs;
}

}  // namespace detail

/// All non-excluded pairs, best first. `exclude` lists pairs (any
/// orientation) already present.
inline std::vector<ScoredPair> rank_pairs(const WalkMatrix& w, std::span<const Edge> exclude = {}) {
  std::vector<Edge> skip;
  skip.reserve(exclude.size());
  for (auto [a, b] : exclude) skip.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(skip.begin(), skip.end());
  auto pairs = detail::score_pairs(
      w, [&](node_t u, node_t v) { return std::binary_search(skip.begin(), skip.end(), Edge{u, v}); });
  std::sort(pairs.begin(), pairs.end(), ranks_before);
  return pairs;
}

/// The first k pairs of rank_pairs(w), computed by partial selection.
inline std::vector<ScoredPair> top_pairs(const WalkMatrix& w, std::size_t k) {
  auto pairs = detail::score_pairs(w, [](node_t, node_t) { return false; });
  k = std::min(k, pairs.size());
  std::nth_element(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(k), pairs.end(), ranks_before);
  pairs.resize(k);
  std::sort(pairs.begin(), pairs.end(), ranks_before);
  return pairs;
}

struct ScgResult {
  Graph graph;
  std::size_t zero_score_pairs = 0;  // selected pairs with confluence exactly 0
  double min_selected_score = 0.0;   // 0 when nothing was selected
};

inline void check_scg_target(std::size_t n, std::uint64_t m) {
  const auto nn = static_cast<std::uint64_t>(n);
  if (m < nn || m > nn * nn)
    throw Error(Errc::parameter, "target arc count " + std::to_string(m) + " outside [" + std::to_string(nn) +
                                     ", " + std::to_string(nn * nn) + "]");
  if ((m - nn) % 2 != 0)
    throw Error(Errc::parity, "target arc count minus node count must be even, got " + std::to_string(m - nn));
}

/// Strong confluence graph from an already computed walk matrix.
inline ScgResult scg_from_walk_matrix(const WalkMatrix& w, std::uint64_t m) {
  const std::size_t n = w.size();
  check_scg_target(n, m);
  const auto wanted = static_cast<std::size_t>((m - n) / 2);
  const auto chosen = top_pairs(w, wanted);

  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  ScgResult out{Graph(n)};
  for (const auto& p : chosen) {
    edges.emplace_back(p.u, p.v);
    if (p.score == 0.0) ++out.zero_score_pairs;
  }
  if (!chosen.empty()) out.min_selected_score = chosen.back().score;
  out.graph = Graph::from_edges(n, edges);
  return out;
}

inline ScgResult scg_detailed(const Graph& g_in, std::size_t t, std::uint64_t m, Threads threads = {}) {
  detail::check_walk_length(t);
  check_scg_target(g_in.node_count(), m);
  return scg_from_walk_matrix(all_pairs_walk_matrix(g_in, t, threads), m);
}

inline Graph scg(const Graph& g_in, std::size_t t, std::uint64_t m, Threads threads = {}) {
  return scg_detailed(g_in, t, m, threads).graph;
}

inline void write_scores_csv(std::ostream& out, std::span<const ScoredPair> ranked) {
  out << "u,v,score\n";
  for (const auto& p : ranked) out << p.u << ',' << p.v << ',' << format_real(p.score) << '\n';
}

}  // namespace swgen
