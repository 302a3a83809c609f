#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "satstar/experiment.hpp"
#include "satstar/saturation.hpp"

using namespace satstar;
namespace fs = std::filesystem;

namespace {

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = text.find("\r\n", pos)) != std::string::npos; pos += 2) ++lines;
  return lines;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("satstar_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(ExperimentConfig, ParsesKnownFields) {
  const auto c = parse_experiment_config(
      R"({"mode": "concentration-window", "n": 50, "p": 0.5, "r": 4, "trials": 3, "master_seed": 9,
          "k_max": 30, "v1_mode": "sparse:1", "workers": 2})");
  EXPECT_EQ(c.mode, ExperimentMode::concentration_window);
  EXPECT_EQ(c.n, 50u);
  EXPECT_EQ(c.r, 4);
  EXPECT_EQ(c.trials, 3u);
  EXPECT_EQ(c.master_seed, 9u);
  EXPECT_EQ(c.k_max, std::optional<std::size_t>(30));
  EXPECT_EQ(c.v1_mode, "sparse:1");
  EXPECT_EQ(c.workers, 2u);
}

TEST(ExperimentConfig, RejectsBadInput) {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"n": 10})",
      R"({"mode": "sideways", "n": 10})",
      R"({"mode": "alpha", "n": 10, "p": 0.5, "bogus": 1})",
      R"({"mode": "alpha", "n": -10, "p": 0.5})",
      R"({"mode": "alpha", "n": 10.5, "p": 0.5})",
      R"({"mode": "alpha", "n": 10, "p": "half"})",
      R"({"mode": "alpha", "n": 10, "p": 1.5})",
      R"({"mode": "alpha", "n": 10, "p": 0.5, "trials": 0})",
      R"({"mode": "concentration-exact", "n": 40, "p": 0.5})",
      R"({"mode": "concentration-window", "n": 50, "p": 0.5, "v1_mode": "greedy"})",
      R"({"mode": "phi-validate", "n": 10, "p": 0.5, "k": 11})",
      R"({"mode": "phi-validate", "n": 10, "p": 0.5, "k": 3, "m": 4})",
      R"({"mode": "theory-table", "n_grid": [100, "x"], "p": 0.5})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_experiment_config(text), ConfigError) << text;
}

TEST(ExperimentConfig, MissingFileIsIoError) {
  EXPECT_THROW(load_experiment_config("/nonexistent/dir/config.json"), IoError);
}

TEST(Experiment, CsvShape) {
  auto c = parse_experiment_config(R"({"mode": "phi-validate", "n": 10, "p": 0.5, "k": 4, "m": 1, "trials": 100})");
  const auto result = run_experiment(c);
  ASSERT_EQ(result.records.size(), 100u);
  const auto csv = to_csv(result.records);
  EXPECT_EQ(count_lines(csv), 101u);
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")),
            "trial,seed,n,p,r,x0,r_prime,mu,predicted,v1_size,v1_edges,sat_lower,sat_upper,sat_exact,"
            "alpha0,alpha_m,xi,in_window,certificate,mu_certified,elapsed_ms,status");
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    EXPECT_EQ(result.records[i].trial, i);
    EXPECT_EQ(result.records[i].status, "ok");
    EXPECT_TRUE(result.records[i].xi.has_value());
  }
  EXPECT_EQ(result.summary.trials, 100u);
  EXPECT_EQ(result.summary.ok, 100u);
  EXPECT_TRUE(result.summary.metrics.count("phi"));
}

TEST(Experiment, CsvQuotesAwkwardCells) {
  ExperimentRecord rec;
  rec.seed = "1:2";
  rec.status = "error: bad \"value\", twice";
  rec.predicted = {5, 6};
  rec.alpha_m = {std::nullopt, 7};
  const auto csv = to_csv({rec});
  EXPECT_NE(csv.find(",5;6,"), std::string::npos);
  EXPECT_NE(csv.find(",NA;7,"), std::string::npos);
  EXPECT_NE(csv.find("\"error: bad \"\"value\"\", twice\"\r\n"), std::string::npos);
}

TEST(Experiment, ExactModeBoundsBracketTruth) {
  auto c = parse_experiment_config(
      R"({"mode": "concentration-exact", "n": 10, "p": 0.5, "r": 3, "trials": 6, "master_seed": 5})");
  const auto result = run_experiment(c);
  for (const auto& rec : result.records) {
    ASSERT_TRUE(rec.sat_exact.has_value()) << rec.status;
    if (rec.sat_upper) EXPECT_LE(*rec.sat_exact, *rec.sat_upper);
    if (rec.sat_lower) EXPECT_LE(*rec.sat_lower, *rec.sat_exact);
  }
}

TEST(Experiment, WindowModeRecordsAreConsistent) {
  auto c = parse_experiment_config(
      R"({"mode": "concentration-window", "n": 60, "p": 0.5, "r": 4, "trials": 3, "master_seed": 7})");
  const auto result = run_experiment(c);
  for (const auto& rec : result.records) {
    EXPECT_EQ(rec.status, "ok");
    ASSERT_TRUE(rec.sat_upper.has_value());
    if (rec.sat_lower) EXPECT_LE(*rec.sat_lower, *rec.sat_upper);
    EXPECT_TRUE(rec.certificate == "full" || rec.certificate == "partial" || rec.certificate == "none");
    EXPECT_EQ(rec.in_window.has_value(), rec.sat_lower.has_value());
    EXPECT_EQ(rec.certificate == "none", !rec.sat_lower.has_value());
  }
  EXPECT_TRUE(result.summary.metrics.count("window_hit_rate"));
}

TEST(Experiment, CertificateIsSoundOnSmallGraphs) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Graph g = sample_gnp(10, 0.5, Seed{77, s});
    for (int r : {3, 4}) {
      TheoryParams params;
      params.n = 10;
      params.r = r;
      const auto pred = predict(params);
      const auto cert = certify_lower_bound(g, pred, r, 10, kDefaultNodeBudget);
      if (cert.value) EXPECT_LE(*cert.value, static_cast<long long>(sat_exact_oracle(g, r).value));
    }
  }
}

TEST(Experiment, DeterministicAcrossWorkerCounts) {
  auto c = parse_experiment_config(
      R"({"mode": "alpha", "n": 40, "p": 0.5, "trials": 12, "master_seed": 3, "alpha_m_max": 1})");
  c.workers = 1;
  const auto one = to_csv(run_experiment(c).records);
  c.workers = 3;
  const auto three = to_csv(run_experiment(c).records);
  EXPECT_EQ(one, three);
}

TEST(Experiment, TheoryTableCoversGrid) {
  auto c = parse_experiment_config(
      R"({"mode": "theory-table", "n_grid": [1000, 10000], "p_grid": [0.3, 0.5], "r_grid": [3, 4, 5]})");
  const auto result = run_experiment(c);
  EXPECT_EQ(result.records.size(), 12u);
  for (const auto& rec : result.records) EXPECT_TRUE(rec.x0.has_value());
}

TEST(Experiment, EmitOutputsWritesRelativePlot) {
  auto c = parse_experiment_config(R"({"mode": "alpha", "n": 30, "p": 0.5, "trials": 4})");
  c.out_dir = (scratch("emit") / "nested").string();
  c.csv_name = "alpha.csv";
  const auto paths = emit_outputs(c, run_experiment(c));
  EXPECT_TRUE(fs::exists(paths.csv));
  EXPECT_TRUE(fs::exists(paths.summary));
  const auto plot = slurp(paths.plot);
  EXPECT_NE(plot.find("'alpha.csv'"), std::string::npos);
  EXPECT_EQ(plot.find(c.out_dir), std::string::npos);
  EXPECT_EQ(count_lines(slurp(paths.csv)), 5u);
}

TEST(Experiment, EmitOutputsReportsIoErrors) {
  const auto dir = scratch("blocked");
  std::ofstream(dir / "file") << "x";
  auto c = parse_experiment_config(R"({"mode": "alpha", "n": 20, "p": 0.5, "trials": 1})");
  c.out_dir = (dir / "file" / "sub").string();
  EXPECT_THROW(emit_outputs(c, run_experiment(c)), IoError);
}

#ifdef SATSTAR_CLI_PATH
namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SATSTAR_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ExitCodes) {
  const auto dir = scratch("cli");
  const auto graph = (dir / "g.txt").string();
  EXPECT_EQ(run_cli("sample --n 12 --p 0.5 --seed 1 --out " + graph), 0);
  EXPECT_EQ(run_cli("theory --n 1000 --p 0.5 --r 4"), 0);
  EXPECT_EQ(run_cli("solve --graph " + graph + " --r 3"), 0);
  EXPECT_EQ(run_cli("theory --n 1000 --p 1.5 --r 4"), 2);
  EXPECT_EQ(run_cli("theory --n 1000"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("solve --graph " + (dir / "missing.txt").string() + " --r 3"), 3);
  std::ofstream(dir / "bad.txt") << "3 1\n0 7\n";
  EXPECT_EQ(run_cli("alpha --graph " + (dir / "bad.txt").string() + " --m 0"), 3);
  std::ofstream(dir / "bad.json") << R"({"mode": "alpha", "n": 10, "p": 0.5, "oops": 1})";
  EXPECT_EQ(run_cli("experiment --config " + (dir / "bad.json").string()), 2);
  EXPECT_EQ(run_cli("experiment --config " + (dir / "none.json").string()), 3);
}
#endif
