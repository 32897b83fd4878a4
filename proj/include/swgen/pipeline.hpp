#pragma once

// Erdős–Rényi generation, the random-graph-to-small-world pipeline, the
// walk-length sweep and the two-target confluence experiment.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <unordered_set>
#include <vector>

#include "swgen/confluence_graph.hpp"
#include "swgen/error.hpp"
#include "swgen/graph.hpp"
#include "swgen/metrics.hpp"
#include "swgen/parallel.hpp"
#include "swgen/random_walk.hpp"
#include "swgen/structure.hpp"

namespace swgen {

/// Seeded generator with a pinned algorithm: std::mt19937_64 (its output
/// sequence is fixed by the standard) and a bounded draw done here rather than
/// through std::uniform_int_distribution, whose algorithm varies by vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound), bound > 0, by rejection of the biased tail.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline void check_arc_target(std::size_t n, std::uint64_t arcs, const char* what) {
  const auto nn = static_cast<std::uint64_t>(n);
  if (arcs < nn)
    throw Error(Errc::parameter, std::string(what) + " " + std::to_string(arcs) + " is below the node count " +
                                     std::to_string(nn));
  if ((arcs - nn) % 2 != 0)
    throw Error(Errc::parity, std::string(what) + " minus node count must be even, got " +
                                  std::to_string(arcs - nn));
  if (arcs > nn * nn)
    throw Error(Errc::overfull, std::string(what) + " " + std::to_string(arcs) +
                                    " needs more edges than the complete graph has");
}

}  // namespace detail

/// G(n, M): exactly (arcs - n) / 2 distinct undirected edges drawn uniformly.
/// Sparse targets use rejection sampling of node pairs; targets above half of
/// all pairs shuffle the full pair list instead.
inline Graph er_graph(std::size_t n, std::uint64_t arcs, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::invalid_size, "graph must have at least one node");
  detail::check_arc_target(n, arcs, "input arc count");
  const auto wanted = static_cast<std::size_t>((arcs - n) / 2);
  const std::uint64_t all_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(wanted);

  if (2 * static_cast<std::uint64_t>(wanted) <= all_pairs) {
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(wanted * 2);
    while (edges.size() < wanted) {
      auto a = static_cast<node_t>(rng.below(n));
      auto b = static_cast<node_t>(rng.below(n));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (taken.insert((static_cast<std::uint64_t>(a) << 32) | b).second) edges.emplace_back(a, b);
    }
  } else {
    std::vector<Edge> pool;
    pool.reserve(static_cast<std::size_t>(all_pairs));
    for (node_t a = 0; a < n; ++a)
      for (node_t b = a + 1; b < n; ++b) pool.emplace_back(a, b);
    for (std::size_t i = 0; i < wanted; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    edges.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(wanted));
  }
  return Graph::from_edges(n, edges);
}

struct MakeswParams {
  std::size_t n = 0;
  std::uint64_t arcs_in = 0;
  std::size_t t = 1;
  std::uint64_t arcs = 0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n == 0) throw Error(Errc::invalid_size, "graph must have at least one node");
    detail::check_arc_target(n, arcs_in, "input arc count");
    detail::check_arc_target(n, arcs, "target arc count");
    detail::check_walk_length(t);
  }
};

struct MakeswResult {
  Graph graph;                  // largest component, renumbered
  Graph full;                   // strong confluence graph before component selection
  std::vector<node_t> new_to_old;
  std::uint64_t seed = 0;
  std::uint64_t full_arc_count = 0;
  double lcc_fraction = 1.0;
  std::size_t zero_score_pairs = 0;
};

namespace detail {

inline MakeswResult finish_makesw(ScgResult extracted, std::uint64_t seed) {
  auto lcc = largest_component_subgraph(extracted.graph);
  MakeswResult out{std::move(lcc.graph), std::move(extracted.graph), std::move(lcc.new_to_old)};
  out.seed = seed;
  out.full_arc_count = out.full.arc_count();
  out.lcc_fraction = static_cast<double>(out.graph.node_count()) / static_cast<double>(out.full.node_count());
  out.zero_score_pairs = extracted.zero_score_pairs;
  return out;
}

}  // namespace detail

inline MakeswResult makesw(const MakeswParams& params, Threads threads = {}) {
  params.validate();
  const Graph input = er_graph(params.n, params.arcs_in, params.seed);
  return detail::finish_makesw(scg_detailed(input, params.t, params.arcs, threads), params.seed);
}

struct SweepParams {
  std::size_t n = 0;
  std::uint64_t arcs_in = 0;
  std::uint64_t arcs = 0;
  ClusteringMeasure clustering = ClusteringMeasure::global;
};

struct SweepRecord {
  std::size_t t = 0;
  std::uint64_t seed = 0;
  SmallWorldReport report;
};

/// One record per (t, seed), ordered by t then seed. Per seed the walk matrix
/// is advanced from one requested t to the next instead of being recomputed.
inline std::vector<SweepRecord> sweep(const SweepParams& params, std::vector<std::size_t> ts,
                                      std::vector<std::uint64_t> seeds, Threads threads = {}) {
  if (ts.empty()) throw Error(Errc::parameter, "sweep needs at least one walk length");
  if (seeds.empty()) throw Error(Errc::parameter, "sweep needs at least one seed");
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  MakeswParams{params.n, params.arcs_in, ts.front(), params.arcs, 0}.validate();

  std::vector<SweepRecord> records(ts.size() * seeds.size());
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const Graph input = er_graph(params.n, params.arcs_in, seeds[s]);
    WalkMatrix walks(input, ts.front(), threads);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      walks.advance(input, ts[i] - walks.steps(), threads);
      auto result = detail::finish_makesw(scg_from_walk_matrix(walks, params.arcs), seeds[s]);
      records[i * seeds.size() + s] = {
          ts[i], seeds[s], small_world_check(result.graph, result.lcc_fraction, params.clustering, threads)};
    }
  }
  return records;
}

inline constexpr const char* kSweepCsvHeader =
    "t,seed,n,m,lcc_fraction,diameter,avg_path_len,clustering,slope,r2,verdict";

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& rec : records) {
    const auto& r = rec.report;
    out << rec.t << ',' << rec.seed << ',' << r.n << ',' << r.m << ',' << format_real(r.lcc_fraction) << ','
        << r.diameter << ',' << format_real(r.avg_path_length) << ',' << format_real(r.clustering) << ','
        << detail::fit_field(r.fit, &PowerLawFit::slope) << ',' << detail::fit_field(r.fit, &PowerLawFit::r2)
        << ',' << detail::flag(r.verdict) << '\n';
  }
}

struct ConfluenceExperiment {
  ConfluenceSeries first;   // source u, target v1
  ConfluenceSeries second;  // source u, target v2
  bool degrees_match = false;
};

inline ConfluenceExperiment confluence_experiment(const Graph& g, node_t u, node_t v1, node_t v2,
                                                  std::size_t steps) {
  if (u == v1 || u == v2 || v1 == v2) throw Error(Errc::pair, "u, v1 and v2 must be distinct");
  ConfluenceExperiment out{confluence_series(g, u, v1, steps), confluence_series(g, u, v2, steps)};
  out.degrees_match = g.degree(v1) == g.degree(v2);
  return out;
}

inline void write_confluence_experiment_csv(std::ostream& out, const ConfluenceExperiment& e) {
  out << "t,p_u_v1,p_v1_u,asym_v1,p_u_v2,p_v2_u,asym_v2\n";
  for (std::size_t i = 0; i < e.first.length(); ++i)
    out << (i + 1) << ',' << format_real(e.first.forward[i]) << ',' << format_real(e.first.backward[i]) << ','
        << format_real(e.first.asymptote) << ',' << format_real(e.second.forward[i]) << ','
        << format_real(e.second.backward[i]) << ',' << format_real(e.second.asymptote) << '\n';
}

}  // namespace swgen
