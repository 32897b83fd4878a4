#pragma once

// Lazy random walk on a reflexive graph. From u the walker moves to each node
// of N+(u) = neighbors(u) ∪ {u} with probability 1/degree(u). Row u of the
// t-step transition matrix is obtained by pushing the one-hot vector at u
// through t sparse steps; the dense matrix is never formed.

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "swgen/error.hpp"
#include "swgen/graph.hpp"
#include "swgen/structure.hpp"

namespace swgen {

/// A distribution over the nodes of one graph.
class ProbabilityVector {
 public:
  ProbabilityVector() = default;
  explicit ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {}

  static ProbabilityVector point_mass(std::size_t n, node_t u) {
    if (u >= n) throw Error(Errc::index, "node " + std::to_string(u) + " out of range");
    std::vector<double> v(n, 0.0);
    v[u] = 1.0;
    return ProbabilityVector(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double>& mutable_values() noexcept { return values_; }

  double total() const {
    double s = 0.0;
    for (double x : values_) s += x;
    return s;
  }

  bool is_valid(double tolerance = 1e-9) const {
    for (double x : values_)
      if (!(x >= 0.0)) return false;
    return std::abs(total() - 1.0) <= tolerance;
  }

 private:
  std::vector<double> values_;
};

namespace detail {

/// out[v] = sum over u in N+(v), ascending, of in[u] / degree(u). By symmetry
/// this is exactly in * [G]. Summation order is fixed, so every call is
/// bit-reproducible.
inline void step_into(const Graph& g, std::span<const double> in, std::span<double> out,
                      std::span<double> scaled) {
  const std::size_t n = g.node_count();
  for (node_t u = 0; u < n; ++u) scaled[u] = in[u] / static_cast<double>(g.degree(u));
  for (node_t v = 0; v < n; ++v) {
    double acc = 0.0;
    bool self_done = false;
    for (node_t u : g.neighbors(v)) {
      if (!self_done && v < u) {
        acc += scaled[v];
        self_done = true;
      }
      acc += scaled[u];
    }
    if (!self_done) acc += scaled[v];
    out[v] = acc;
  }
}

inline void check_walk_length(std::size_t t) {
  if (t == 0) throw Error(Errc::walk_length, "walk length must be at least 1");
}

}  // namespace detail

inline ProbabilityVector step(const Graph& g, const ProbabilityVector& p) {
  if (p.size() != g.node_count())
    throw Error(Errc::dimension, "vector of size " + std::to_string(p.size()) + " for a graph of " +
                                     std::to_string(g.node_count()) + " nodes");
  std::vector<double> out(p.size());
  std::vector<double> scaled(p.size());
  detail::step_into(g, p.values(), out, scaled);
  return ProbabilityVector(std::move(out));
}

/// Row u of [G]^t.
inline ProbabilityVector walk_distribution(const Graph& g, node_t u, std::size_t t) {
  detail::check_walk_length(t);
  auto current = ProbabilityVector::point_mass(g.node_count(), u);
  std::vector<double> next(g.node_count());
  std::vector<double> scaled(g.node_count());
  for (std::size_t i = 0; i < t; ++i) {
    detail::step_into(g, current.values(), next, scaled);
    current.mutable_values().swap(next);
  }
  return current;
}

/// pi(v) = degree(v) / sum of degrees, degrees loop-inclusive.
inline ProbabilityVector stationary_distribution(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto total = static_cast<double>(g.arc_count());
  std::vector<double> pi(n);
  for (node_t v = 0; v < n; ++v) pi[v] = static_cast<double>(g.degree(v)) / total;
  return ProbabilityVector(std::move(pi));
}

/// max(([G]^t)_{u,v}, ([G]^t)_{v,u})
inline double confluence(const Graph& g, node_t u, node_t v, std::size_t t) {
  if (u == v) throw Error(Errc::pair, "confluence needs two distinct nodes");
  detail::check_walk_length(t);
  const auto from_u = walk_distribution(g, u, t);
  const auto from_v = walk_distribution(g, v, t);
  return std::max(from_u[v], from_v[u]);
}

struct ConfluenceSeries {
  node_t source = 0;
  node_t target = 0;
  std::vector<double> forward;   // ([G]^t)_{source,target}, t = 1..T
  std::vector<double> backward;  // ([G]^t)_{target,source}
  double asymptote = 0.0;        // degree(target) / sum of degrees

  std::size_t length() const noexcept { return forward.size(); }
};

inline ConfluenceSeries confluence_series(const Graph& g, node_t u, node_t v, std::size_t steps) {
  if (u == v) throw Error(Errc::pair, "confluence series needs two distinct nodes");
  detail::check_walk_length(steps);
  if (u >= g.node_count() || v >= g.node_count()) throw Error(Errc::index, "series endpoint out of range");
  if (!is_connected(g)) throw Error(Errc::not_connected, "confluence asymptote needs a connected graph");

  ConfluenceSeries s;
  s.source = u;
  s.target = v;
  s.asymptote = static_cast<double>(g.degree(v)) / static_cast<double>(g.arc_count());
  s.forward.reserve(steps);
  s.backward.reserve(steps);
  auto from_u = ProbabilityVector::point_mass(g.node_count(), u);
  auto from_v = ProbabilityVector::point_mass(g.node_count(), v);
  for (std::size_t t = 1; t <= steps; ++t) {
    from_u = step(g, from_u);
    from_v = step(g, from_v);
    s.forward.push_back(from_u[v]);
    s.backward.push_back(from_v[u]);
  }
  return s;
}

/// Reals rendered with 12 significant digits.
inline std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

inline void write_series_csv(std::ostream& out, const ConfluenceSeries& s) {
  out << "t,p_uv,p_vu,asymptote\n";
  for (std::size_t i = 0; i < s.length(); ++i)
    out << (i + 1) << ',' << format_real(s.forward[i]) << ',' << format_real(s.backward[i]) << ','
        << format_real(s.asymptote) << '\n';
}

}  // namespace swgen
