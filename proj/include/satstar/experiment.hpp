#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satstar/graph.hpp"
#include "satstar/sparse_set.hpp"
#include "satstar/theory.hpp"

namespace satstar {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentMode { concentration_exact, concentration_window, alpha, phi_validate, theory_table };

std::string to_string(ExperimentMode mode);
ExperimentMode parse_experiment_mode(const std::string& text);

/// Field names double as the JSON config keys.
struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::concentration_window;
  std::size_t n = 0;
  double p = 0.5;
  int r = 3;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::optional<std::size_t> k_max;  // absolute cap for the k >= x0+1 scan
  std::size_t k_max_offset = 20;     // cap = x0 + offset when k_max is unset
  std::uint64_t budget = kDefaultNodeBudget;  // node budget per search call
  double eps = 0.05;
  double eps_prime = 1e-3;
  double delta = 0.1;
  std::size_t k = 0;            // phi-validate
  std::size_t m = 0;            // phi-validate
  std::size_t alpha_m_max = 2;  // alpha: alpha_1..alpha_{alpha_m_max}
  std::string v1_mode = "auto";
  std::vector<std::size_t> n_grid;  // theory-table
  std::vector<double> p_grid;
  std::vector<int> r_grid;
  std::string out_dir = ".";
  std::string csv_name = "records.csv";
  std::string summary_name = "summary.json";
  std::string plot_name = "plot.gp";
  std::size_t workers = 1;
  bool record_timing = false;  // elapsed_ms stays empty otherwise, keeping CSVs reproducible

  /// Throws ConfigError.
  void validate() const;
  TheoryParams theory_params() const;
};

/// Throws ConfigError on malformed JSON, unknown keys, wrong types or invalid values.
ExperimentConfig parse_experiment_config(const std::string& json_text);
/// Throws IoError if the file cannot be read, ConfigError otherwise.
ExperimentConfig load_experiment_config(const std::string& path);

/// One row of output. Optional fields are written as empty CSV cells.
struct ExperimentRecord {
  std::size_t trial = 0;
  std::string seed;  // "master:stream" of the per-trial seed
  std::size_t n = 0;
  double p = 0;
  int r = 0;
  std::optional<long long> x0;
  std::optional<int> r_prime;
  std::optional<int> mu;
  std::vector<long long> predicted;  // predicted sat values, or the alpha window
  std::optional<std::size_t> v1_size;
  std::optional<std::size_t> v1_edges;
  std::optional<long long> sat_lower;  // certified
  std::optional<long long> sat_upper;  // constructed
  std::optional<long long> sat_exact;
  std::optional<std::size_t> alpha0;
  std::vector<std::optional<std::size_t>> alpha_m;  // m = 1.. ; nullopt when no set induces exactly m edges
  std::optional<std::uint64_t> xi;
  std::optional<bool> in_window;
  std::string certificate;  // full | partial | none, empty when not computed
  std::optional<int> mu_certified;
  std::optional<double> elapsed_ms;
  std::string status = "ok";
};

struct ExperimentSummary {
  std::size_t trials = 0;
  std::size_t ok = 0;
  std::size_t errors = 0;
  std::map<std::string, double> metrics;
  std::map<std::string, std::string> notes;
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
  ExperimentSummary summary;
};

/// Lower bound base_term + mu_certified, certified on one host graph.
struct LowerBoundCertificate {
  std::optional<long long> value;  // nullopt: not even mu = 0 could be certified
  int mu_certified = -1;
  bool full = false;  // every k was settled; false means the k-range was truncated or a search ran out
};

LowerBoundCertificate certify_lower_bound(const Graph& g, const Prediction& pred, int r, std::size_t k_max,
                                          std::uint64_t budget, std::optional<std::size_t> alpha0 = {});

/// Trial seed = Seed{master_seed, 0}.derive(trial).
Seed trial_seed(const ExperimentConfig& config, std::size_t trial);
ExperimentRecord run_trial(const ExperimentConfig& config, std::size_t trial);
/// Records are ordered by trial index whatever the worker count.
ExperimentResult run_experiment(const ExperimentConfig& config);
ExperimentSummary summarize(const ExperimentConfig& config, const std::vector<ExperimentRecord>& records);

const std::vector<std::string>& csv_header();
std::string to_csv(const std::vector<ExperimentRecord>& records);
std::string to_json(const ExperimentSummary& summary);
std::string plot_script(const ExperimentConfig& config);

struct OutputPaths {
  std::string csv;
  std::string summary;
  std::string plot;
};

/// Writes CSV, summary and plot script into config.out_dir. Throws IoError.
OutputPaths emit_outputs(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace satstar
