#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "swgen/error.hpp"
#include "swgen/graph.hpp"
#include "swgen/parallel.hpp"
#include "swgen/random_walk.hpp"
#include "swgen/structure.hpp"

namespace swgen {

/// Non-loop degree -> number of nodes.
using DegreeHistogram = std::map<std::size_t, std::size_t>;

inline DegreeHistogram degree_distribution(const Graph& g) {
  DegreeHistogram h;
  for (node_t u = 0; u < g.node_count(); ++u) ++h[g.nonloop_degree(u)];
  return h;
}

struct PowerLawFit {
  double slope = 0.0;
  double lambda = 0.0;  // |slope|
  double r2 = 0.0;
  std::size_t points_used = 0;
};

/// Ordinary least squares of log10(count) on log10(k) over bins with k >= 1
/// and count >= 1. r2 is the coefficient of determination of that fit, which
/// for a simple linear regression is the squared Pearson correlation.
inline PowerLawFit power_law_fit(const DegreeHistogram& h) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (auto [k, count] : h) {
    if (k == 0 || count == 0) continue;
    xs.push_back(std::log10(static_cast<double>(k)));
    ys.push_back(std::log10(static_cast<double>(count)));
  }
  if (xs.size() < 2)
    throw Error(Errc::insufficient_data,
                "power-law fit needs at least 2 usable bins, got " + std::to_string(xs.size()));

  const auto count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  PowerLawFit fit;
  fit.points_used = xs.size();
  fit.slope = sxy / sxx;
  fit.lambda = std::abs(fit.slope);
  // A flat series is fitted perfectly by a flat line.
  fit.r2 = syy == 0.0 ? 1.0 : std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0);
  return fit;
}

/// Expected average path length and clustering of an Erdős–Rényi graph of the
/// same size and density. d is the mean non-loop degree.
struct ErReference {
  double ell_rand = 0.0;
  double c_rand = 0.0;
  double d = 0.0;
};

inline ErReference er_reference(std::size_t n, std::uint64_t m) {
  if (m <= n) throw Error(Errc::degenerate_density, "reference values need m > n");
  const auto nn = static_cast<double>(n);
  const auto extra = static_cast<double>(m - n);
  ErReference ref;
  ref.d = extra / nn;
  ref.ell_rand = std::log(nn) / std::log(ref.d);
  ref.c_rand = extra / (nn * (nn - 1.0));
  return ref;
}

/// Binomial(n-1, p) pmf at k: the non-loop degree law of G(n, p).
inline double er_degree_pmf(std::size_t n, double p, std::size_t k) {
  if (n == 0) throw Error(Errc::domain, "n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::domain, "p must lie in [0,1]");
  if (k > n - 1) throw Error(Errc::domain, "k = " + std::to_string(k) + " exceeds n - 1");
  const std::size_t trials = n - 1;
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == trials ? 1.0 : 0.0;
  const double log_choose = std::lgamma(static_cast<double>(trials) + 1.0) -
                            std::lgamma(static_cast<double>(k) + 1.0) -
                            std::lgamma(static_cast<double>(trials - k) + 1.0);
  return std::exp(log_choose + static_cast<double>(k) * std::log(p) +
                  static_cast<double>(trials - k) * std::log1p(-p));
}

/// Which clustering statistic feeds the clustering criterion.
enum class ClusteringMeasure {
  global,  // transitivity(): fraction of connected triples that are closed
  local,   // clustering_coefficient(): mean of per-node coefficients
};

inline double clustering_of(const Graph& g, ClusteringMeasure measure) {
  return measure == ClusteringMeasure::global ? transitivity(g) : clustering_coefficient(g);
}

struct SmallWorldReport {
  std::size_t n = 0;
  std::uint64_t m = 0;
  double lcc_fraction = 1.0;
  std::uint32_t diameter = 0;
  double avg_path_length = 0.0;
  double clustering = 0.0;
  std::optional<PowerLawFit> fit;  // empty when fewer than two usable bins
  bool ok_sparsity = false;
  bool ok_diameter = false;
  bool ok_clustering = false;
  bool ok_heavytail = false;
  bool verdict = false;
};

/// Thresholds, natural logs throughout:
///   sparsity    m <= 10 n ln n
///   clustering  C > 10 m / n^2
///   diameter    L < 3 ln n
///   heavy tail  slope < 0, |slope| > 1 and r2 > 0.8
/// The clustering measure defaults to global transitivity: star-like hubs keep
/// a high mean local coefficient while closing few of their triples.
inline SmallWorldReport small_world_check(const Graph& g, double lcc_fraction,
                                          ClusteringMeasure measure = ClusteringMeasure::global,
                                          Threads threads = {}) {
  if (!is_connected(g)) throw Error(Errc::not_connected, "small-world check needs a connected graph");
  SmallWorldReport r;
  r.n = g.node_count();
  r.m = g.arc_count();
  r.lcc_fraction = lcc_fraction;
  const auto paths = path_statistics(g, threads);
  r.diameter = paths.diameter;
  r.avg_path_length = paths.average_path_length;
  r.clustering = clustering_of(g, measure);
  try {
    r.fit = power_law_fit(degree_distribution(g));
  } catch (const Error& e) {
    if (e.code() != Errc::insufficient_data) throw;
  }

  const auto n = static_cast<double>(r.n);
  const auto m = static_cast<double>(r.m);
  r.ok_sparsity = m <= 10.0 * n * std::log(n);
  r.ok_clustering = r.clustering > 10.0 * m / (n * n);
  r.ok_diameter = static_cast<double>(r.diameter) < 3.0 * std::log(n);
  r.ok_heavytail = r.fit && r.fit->slope < 0.0 && r.fit->lambda > 1.0 && r.fit->r2 > 0.8;
  r.verdict = r.ok_sparsity && r.ok_diameter && r.ok_clustering && r.ok_heavytail;
  return r;
}

inline constexpr const char* kReportCsvHeader =
    "n,m,lcc_fraction,diameter,avg_path_len,clustering,slope,r2,ok_sparsity,ok_diameter,ok_clustering,"
    "ok_heavytail,verdict";

namespace detail {
inline const char* flag(bool b) { return b ? "true" : "false"; }
inline std::string fit_field(const std::optional<PowerLawFit>& fit, double PowerLawFit::*field) {
  return fit ? format_real((*fit).*field) : std::string("nan");
}
}  // namespace detail

inline void write_report_csv_row(std::ostream& out, const SmallWorldReport& r) {
  out << r.n << ',' << r.m << ',' << format_real(r.lcc_fraction) << ',' << r.diameter << ','
      << format_real(r.avg_path_length) << ',' << format_real(r.clustering) << ','
      << detail::fit_field(r.fit, &PowerLawFit::slope) << ',' << detail::fit_field(r.fit, &PowerLawFit::r2) << ','
      << detail::flag(r.ok_sparsity) << ',' << detail::flag(r.ok_diameter) << ','
      << detail::flag(r.ok_clustering) << ',' << detail::flag(r.ok_heavytail) << ',' << detail::flag(r.verdict)
      << '\n';
}

inline void write_report_csv(std::ostream& out, const SmallWorldReport& r) {
  out << kReportCsvHeader << '\n';
  write_report_csv_row(out, r);
}

/// Same field names as the CSV header; slope and r2 are null without a fit.
inline nlohmann::ordered_json report_to_json(const SmallWorldReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["lcc_fraction"] = r.lcc_fraction;
  j["diameter"] = r.diameter;
  j["avg_path_len"] = r.avg_path_length;
  j["clustering"] = r.clustering;
  j["slope"] = r.fit ? nlohmann::ordered_json(r.fit->slope) : nlohmann::ordered_json(nullptr);
  j["r2"] = r.fit ? nlohmann::ordered_json(r.fit->r2) : nlohmann::ordered_json(nullptr);
  j["ok_sparsity"] = r.ok_sparsity;
  j["ok_diameter"] = r.ok_diameter;
  j["ok_clustering"] = r.ok_clustering;
  j["ok_heavytail"] = r.ok_heavytail;
  j["verdict"] = r.verdict;
  return j;
}

}  // namespace swgen
