// swgen: command-line front end for graph generation, strong confluence
// extraction and small-world measurement. All graphs use the edge-list format
// of swgen/edge_list.hpp.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swgen/swgen.hpp"

namespace {

using namespace swgen;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot open '" + path + "' for writing");
  return out;
}

void close_output(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw Error(Errc::io, "write to '" + path + "' failed");
}

/// CSV at `path`, JSON with the same field names at `path`.json.
void write_report_files(const std::string& path, const SmallWorldReport& report) {
  auto csv = open_output(path);
  write_report_csv(csv, report);
  close_output(csv, path);
  const std::string json_path = path + ".json";
  auto json = open_output(json_path);
  json << report_to_json(report).dump(2) << '\n';
  close_output(json, json_path);
}

SmallWorldReport report_for(const Graph& g, double scale_fraction, ClusteringMeasure measure, Threads threads) {
  const auto lcc = largest_component_subgraph(g);
  const double fraction =
      scale_fraction * static_cast<double>(lcc.graph.node_count()) / static_cast<double>(g.node_count());
  return small_world_check(lcc.graph, fraction, measure, threads);
}

const std::map<std::string, ClusteringMeasure> kMeasures{{"global", ClusteringMeasure::global},
                                                         {"local", ClusteringMeasure::local}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-world graphs from random walks on Erdos-Renyi graphs"};
  app.require_subcommand(1);
  unsigned thread_count = 0;
  app.add_option("--threads", thread_count, "Worker threads (0 = one per hardware thread)");

  ClusteringMeasure measure = ClusteringMeasure::global;
  auto add_measure = [&](CLI::App* cmd) {
    cmd->add_option("--clustering", measure, "Clustering statistic for the clustering criterion")
        ->transform(CLI::CheckedTransformer(kMeasures, CLI::ignore_case));
  };

  // generate-er
  std::size_t nodes = 0;
  std::uint64_t arcs_in = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* generate = app.add_subcommand("generate-er", "Sample an Erdos-Renyi G(n, M) graph");
  generate->add_option("--nodes", nodes, "Node count")->required();
  generate->add_option("--arcs", arcs_in, "Arc count (n + 2 * edges)")->required();
  generate->add_option("--seed", seed, "RNG seed")->required();
  generate->add_option("--out", out_path, "Output edge list")->required();

  // scg
  std::string in_path;
  std::size_t walk_length = 0;
  std::uint64_t arcs = 0;
  std::string scores_path;
  auto* scg_cmd = app.add_subcommand("scg", "Extract the strong confluence graph");
  scg_cmd->add_option("--in", in_path, "Input edge list")->required();
  scg_cmd->add_option("--walk-length", walk_length, "Walk length t")->required();
  scg_cmd->add_option("--arcs", arcs, "Target arc count")->required();
  scg_cmd->add_option("--out", out_path, "Output edge list")->required();
  scg_cmd->add_option("--dump-scores", scores_path, "Write every ranked pair as u,v,score CSV");

  // makesw
  std::string keep_full_path;
  std::string report_path;
  auto* makesw_cmd = app.add_subcommand("makesw", "Random graph -> strong confluence graph -> largest component");
  makesw_cmd->add_option("--nodes", nodes, "Node count")->required();
  makesw_cmd->add_option("--arcs-in", arcs_in, "Arc count of the random input graph")->required();
  makesw_cmd->add_option("--walk-length", walk_length, "Walk length t")->required();
  makesw_cmd->add_option("--arcs", arcs, "Target arc count")->required();
  makesw_cmd->add_option("--seed", seed, "RNG seed")->required();
  makesw_cmd->add_option("--out", out_path, "Output edge list (largest component)")->required();
  makesw_cmd->add_option("--keep-full", keep_full_path, "Also write the graph before component selection");
  makesw_cmd->add_option("--report", report_path, "Write the small-world report (CSV, plus .json)");
  add_measure(makesw_cmd);

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Small-world report of a graph's largest component");
  metrics_cmd->add_option("--in", in_path, "Input edge list")->required();
  metrics_cmd->add_option("--report", report_path, "Report path (CSV, plus .json)")->required();
  add_measure(metrics_cmd);

  // sweep
  std::size_t t_min = 0;
  std::size_t t_max = 0;
  std::vector<std::uint64_t> seeds;
  auto* sweep_cmd = app.add_subcommand("sweep", "Small-world report for every walk length in [t-min, t-max]");
  sweep_cmd->add_option("--nodes", nodes, "Node count")->required();
  sweep_cmd->add_option("--arcs-in", arcs_in, "Arc count of the random input graph")->required();
  sweep_cmd->add_option("--arcs", arcs, "Target arc count")->required();
  sweep_cmd->add_option("--t-min", t_min, "Smallest walk length")->required();
  sweep_cmd->add_option("--t-max", t_max, "Largest walk length")->required();
  sweep_cmd->add_option("--seeds", seeds, "Comma-separated seeds")->required()->delimiter(',');
  sweep_cmd->add_option("--out", out_path, "Output CSV")->required();
  add_measure(sweep_cmd);

  // confluence-curve
  node_t u = 0;
  node_t v1 = 0;
  node_t v2 = 0;
  std::size_t steps = 0;
  auto* curve_cmd = app.add_subcommand("confluence-curve", "Walk probabilities from u toward v1 and v2 over t");
  curve_cmd->add_option("--in", in_path, "Input edge list")->required();
  curve_cmd->add_option("--u", u, "Source node")->required();
  curve_cmd->add_option("--v1", v1, "First target")->required();
  curve_cmd->add_option("--v2", v2, "Second target")->required();
  curve_cmd->add_option("--t-max", steps, "Longest walk")->required();
  curve_cmd->add_option("--out", out_path, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "swgen: " << e.what() << '\n';
    return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
  }

  const Threads threads{thread_count};
  try {
    if (generate->parsed()) {
      write_edge_list_file(out_path, er_graph(nodes, arcs_in, seed));
    } else if (scg_cmd->parsed()) {
      const auto input = read_edge_list_file(in_path);
      detail::check_walk_length(walk_length);
      check_scg_target(input.node_count(), arcs);
      const WalkMatrix walks(input, walk_length, threads);
      write_edge_list_file(out_path, scg_from_walk_matrix(walks, arcs).graph);
      if (!scores_path.empty()) {
        auto out = open_output(scores_path);
        write_scores_csv(out, rank_pairs(walks));
        close_output(out, scores_path);
      }
    } else if (makesw_cmd->parsed()) {
      const auto result = makesw({nodes, arcs_in, walk_length, arcs, seed}, threads);
      write_edge_list_file(out_path, result.graph);
      if (!keep_full_path.empty()) write_edge_list_file(keep_full_path, result.full);
      if (!report_path.empty())
        write_report_files(report_path, small_world_check(result.graph, result.lcc_fraction, measure, threads));
    } else if (metrics_cmd->parsed()) {
      write_report_files(report_path, report_for(read_edge_list_file(in_path), 1.0, measure, threads));
    } else if (sweep_cmd->parsed()) {
      if (t_min == 0 || t_max < t_min) throw Error(Errc::parameter, "need 1 <= t-min <= t-max");
      std::vector<std::size_t> ts(t_max - t_min + 1);
      std::iota(ts.begin(), ts.end(), t_min);
      const auto records = sweep({nodes, arcs_in, arcs, measure}, ts, seeds, threads);
      auto out = open_output(out_path);
      write_sweep_csv(out, records);
      close_output(out, out_path);
    } else if (curve_cmd->parsed()) {
      const auto g = read_edge_list_file(in_path);
      const auto experiment = confluence_experiment(g, u, v1, v2, steps);
      if (!experiment.degrees_match)
        std::cerr << "swgen: warning: deg(v1) = " << g.degree(v1) << " differs from deg(v2) = " << g.degree(v2)
                  << "; the two series have different limits\n";
      auto out = open_output(out_path);
      write_confluence_experiment_csv(out, experiment);
      close_output(out, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "swgen: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
