#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "swgen/swgen.hpp"

namespace swgen {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swgen_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of the CLI; stderr goes to err.txt.
  int run(const std::string& args) const {
    const std::string cmd = std::string(SWGEN_CLI_PATH) + " " + args + " 2>" + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string stderr_text() const { return slurp(path("err.txt")); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, GenerateErWritesRequestedArcCount) {
  ASSERT_EQ(run("generate-er --nodes 50 --arcs 250 --seed 3 --out " + path("g.txt")), 0);
  const auto g = read_edge_list_file(path("g.txt"));
  EXPECT_EQ(g.node_count(), 50u);
  EXPECT_EQ(g.arc_count(), 250u);
  EXPECT_EQ(g, er_graph(50, 250, 3));
}

TEST_F(Cli, ScgMatchesLibraryAndDumpsScores) {
  write("path.txt", "3 7\n0 1\n1 2\n");
  ASSERT_EQ(run("scg --in " + path("path.txt") + " --walk-length 1 --arcs 5 --out " + path("s.txt") +
                " --dump-scores " + path("scores.csv")),
            0);
  EXPECT_EQ(slurp(path("s.txt")), "3 5\n0 1\n");
  EXPECT_EQ(slurp(path("scores.csv")), "u,v,score\n0,1,0.5\n1,2,0.5\n0,2,0\n");
}

TEST_F(Cli, MakeswWritesGraphFullGraphAndReport) {
  ASSERT_EQ(run("makesw --nodes 120 --arcs-in 480 --walk-length 5 --arcs 1200 --seed 2 --out " + path("sw.txt") +
                " --keep-full " + path("full.txt") + " --report " + path("r.csv")),
            0);
  const auto expected = makesw({120, 480, 5, 1200, 2});
  EXPECT_EQ(read_edge_list_file(path("sw.txt")), expected.graph);
  EXPECT_EQ(read_edge_list_file(path("full.txt")), expected.full);
  std::ostringstream csv;
  write_report_csv(csv, small_world_check(expected.graph, expected.lcc_fraction));
  EXPECT_EQ(slurp(path("r.csv")), csv.str());
  EXPECT_EQ(slurp(path("r.csv.json")),
            report_to_json(small_world_check(expected.graph, expected.lcc_fraction)).dump(2) + "\n");
}

TEST_F(Cli, MetricsUsesLargestComponent) {
  write("two.txt", "5 11\n0 1\n1 2\n3 4\n");
  ASSERT_EQ(run("metrics --in " + path("two.txt") + " --report " + path("m.csv") + " --clustering local"), 0);
  const auto text = slurp(path("m.csv"));
  EXPECT_EQ(text.substr(text.find('\n') + 1, 10), "3,7,0.6,2,");
}

TEST_F(Cli, SweepRowsCoverRangeAndSeeds) {
  ASSERT_EQ(run("sweep --nodes 60 --arcs-in 180 --arcs 420 --t-min 2 --t-max 4 --seeds 5,1 --out " + path("s.csv")),
            0);
  std::istringstream in(slurp(path("s.csv")));
  std::string line;
  std::vector<std::string> prefixes;
  std::getline(in, line);
  EXPECT_EQ(line, kSweepCsvHeader);
  while (std::getline(in, line)) prefixes.push_back(line.substr(0, line.find(',', line.find(',') + 1)));
  EXPECT_EQ(prefixes, (std::vector<std::string>{"2,1", "2,5", "3,1", "3,5", "4,1", "4,5"}));
}

TEST_F(Cli, ConfluenceCurveWarnsOnDegreeMismatch) {
  write("path.txt", "3 7\n0 1\n1 2\n");
  ASSERT_EQ(run("confluence-curve --in " + path("path.txt") + " --u 0 --v1 1 --v2 2 --t-max 3 --out " +
                path("c.csv")),
            0);
  EXPECT_NE(stderr_text().find("warning"), std::string::npos);
  std::istringstream in(slurp(path("c.csv")));
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST_F(Cli, ErrorsGiveOneLineAndNonzeroExit) {
  auto expect_failure = [&](const std::string& args, const std::string& needle) {
    EXPECT_NE(run(args), 0) << args;
    const auto err = stderr_text();
    EXPECT_EQ(err.rfind("swgen: ", 0), 0u) << err;
    EXPECT_EQ(err.find('\n'), err.size() - 1) << err;
    EXPECT_NE(err.find(needle), std::string::npos) << err;
  };
  expect_failure("generate-er --nodes 5 --arcs 6 --seed 1 --out " + path("x.txt"), "parity");
  expect_failure("generate-er --nodes 5 --arcs 27 --seed 1 --out " + path("x.txt"), "overfull");
  expect_failure("scg --in " + path("missing.txt") + " --walk-length 1 --arcs 5 --out " + path("x.txt"), "io");
  write("bad.txt", "3 7\n0 1\n");
  expect_failure("scg --in " + path("bad.txt") + " --walk-length 1 --arcs 5 --out " + path("x.txt"), "format");
  expect_failure("makesw --nodes 10 --arcs-in 20 --walk-length 0 --arcs 20 --seed 1 --out " + path("x.txt"),
                 "walk-length");
  expect_failure("generate-er --nodes 5", "");
  expect_failure("bogus", "");
  expect_failure("metrics --in " + path("bad.txt") + " --report " + path("r.csv") + " --clustering median", "");
}

}  // namespace
}  // namespace swgen
