#include "satstar/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "satstar/construct.hpp"
#include "satstar/lemma.hpp"
#include "satstar/saturation.hpp"

namespace satstar {

using nlohmann::json;

namespace {

const std::vector<std::pair<ExperimentMode, std::string>> kModeNames = {
    {ExperimentMode::concentration_exact, "concentration-exact"},
    {ExperimentMode::concentration_window, "concentration-window"},
    {ExperimentMode::alpha, "alpha"},
    {ExperimentMode::phi_validate, "phi-validate"},
    {ExperimentMode::theory_table, "theory-table"},
};

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(ExperimentMode mode) {
  for (const auto& [m, name] : kModeNames)
    if (m == mode) return name;
  return "unknown";
}

ExperimentMode parse_experiment_mode(const std::string& text) {
  for (const auto& [m, name] : kModeNames)
    if (name == text) return m;
  throw ConfigError("unknown mode \"" + text + "\"");
}

// ---------------------------------------------------------------------------
// Configuration.

TheoryParams ExperimentConfig::theory_params() const {
  TheoryParams params;
  params.n = n;
  params.p = p;
  params.r = r;
  params.eps = eps;
  params.eps_prime = eps_prime;
  params.delta = delta;
  return params;
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError(what); };
  if (trials < 1) fail("trials must be at least 1");
  if (workers < 1) fail("workers must be at least 1");
  if (csv_name.empty() || summary_name.empty() || plot_name.empty()) fail("output file names must be non-empty");
  if (out_dir.empty()) fail("out_dir must be non-empty");
  auto check_prediction = [&](const TheoryParams& params) {
    try {
      predict(params);
    } catch (const std::exception& e) {
      fail(std::string("invalid theory parameters: ") + e.what());
    }
  };
  switch (mode) {
    case ExperimentMode::concentration_exact:
      if (n < 2 || n > kOracleMaxOrder) fail("concentration-exact needs 2 <= n <= " + std::to_string(kOracleMaxOrder));
      check_prediction(theory_params());
      break;
    case ExperimentMode::concentration_window:
      if (n < static_cast<std::size_t>(r) + 1) fail("concentration-window needs n >= r + 1");
      check_prediction(theory_params());
      try {
        parse_v1_mode(v1_mode);
      } catch (const std::exception& e) {
        fail(e.what());
      }
      break;
    case ExperimentMode::alpha:
      if (!(p > 0.0 && p < 1.0)) fail("p must lie in (0, 1)");
      if (!(eps > 0.0)) fail("eps must be positive");
      try {
        alpha_p_value(n, p);
      } catch (const std::exception& e) {
        fail(std::string("alpha_p undefined: ") + e.what());
      }
      break;
    case ExperimentMode::phi_validate:
      if (!(p > 0.0 && p < 1.0)) fail("p must lie in (0, 1)");
      if (n > kCountSetsMaxOrder) fail("phi-validate needs n <= " + std::to_string(kCountSetsMaxOrder));
      if (k > n) fail("phi-validate needs k <= n");
      if (m > k * (k - (k > 0 ? 1 : 0)) / 2) fail("phi-validate needs m <= C(k, 2)");
      break;
    case ExperimentMode::theory_table: {
      const auto ns = n_grid.empty() ? std::vector<std::size_t>{n} : n_grid;
      const auto ps = p_grid.empty() ? std::vector<double>{p} : p_grid;
      const auto rs = r_grid.empty() ? std::vector<int>{r} : r_grid;
      TheoryParams params = theory_params();
      for (auto nn : ns)
        for (auto pp : ps)
          for (auto rr : rs) {
            params.n = nn;
            params.p = pp;
            params.r = rr;
            check_prediction(params);
          }
      break;
    }
  }
}

namespace {

template <typename T>
T get_field(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("field \"" + key + "\" has the wrong type");
  }
}

std::size_t get_count(const json& value, const std::string& key) {
  if (!value.is_number_unsigned())
    throw ConfigError("field \"" + key + "\" must be a non-negative integer");
  return value.get<std::size_t>();
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  if (!doc.contains("mode")) throw ConfigError("missing field \"mode\"");
  for (const auto& [key, value] : doc.items()) {
    if (key == "mode") c.mode = parse_experiment_mode(get_field<std::string>(value, key));
    else if (key == "n") c.n = get_count(value, key);
    else if (key == "p") c.p = get_field<double>(value, key);
    else if (key == "r") c.r = static_cast<int>(get_count(value, key));
    else if (key == "trials") c.trials = get_count(value, key);
    else if (key == "master_seed") c.master_seed = get_count(value, key);
    else if (key == "k_max") c.k_max = value.is_null() ? std::nullopt : std::optional<std::size_t>(get_count(value, key));
    else if (key == "k_max_offset") c.k_max_offset = get_count(value, key);
    else if (key == "budget") c.budget = get_count(value, key);
    else if (key == "eps") c.eps = get_field<double>(value, key);
    else if (key == "eps_prime") c.eps_prime = get_field<double>(value, key);
    else if (key == "delta") c.delta = get_field<double>(value, key);
    else if (key == "k") c.k = get_count(value, key);
    else if (key == "m") c.m = get_count(value, key);
    else if (key == "alpha_m_max") c.alpha_m_max = get_count(value, key);
    else if (key == "v1_mode") c.v1_mode = get_field<std::string>(value, key);
    else if (key == "n_grid") {
      if (!value.is_array()) throw ConfigError("field \"n_grid\" must be an array");
      for (const auto& item : value) c.n_grid.push_back(get_count(item, key));
    } else if (key == "p_grid") c.p_grid = get_field<std::vector<double>>(value, key);
    else if (key == "r_grid") {
      if (!value.is_array()) throw ConfigError("field \"r_grid\" must be an array");
      for (const auto& item : value) c.r_grid.push_back(static_cast<int>(get_count(item, key)));
    } else if (key == "out_dir") c.out_dir = get_field<std::string>(value, key);
    else if (key == "csv_name") c.csv_name = get_field<std::string>(value, key);
    else if (key == "summary_name") c.summary_name = get_field<std::string>(value, key);
    else if (key == "plot_name") c.plot_name = get_field<std::string>(value, key);
    else if (key == "workers") c.workers = get_count(value, key);
    else if (key == "record_timing") c.record_timing = get_field<bool>(value, key);
    else throw ConfigError("unknown field \"" + key + "\"");
  }
  c.validate();
  return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file " + path);
  return parse_experiment_config(buf.str());
}

// ---------------------------------------------------------------------------
// Lower-bound certificate.
//
// A saturated H with V1 of size k and m(V1) = e edges has at least
// e + ceil((r-1)(n-k)/2) edges. The bound base + mu' holds once it holds for
// every k: k <= x0-1 by arithmetic, k = x0 by a sparse-set search, k >= x0+1
// by the per-k check.

LowerBoundCertificate certify_lower_bound(const Graph& g, const Prediction& pred, int r, std::size_t k_max,
                                          std::uint64_t budget, std::optional<std::size_t> alpha0) {
  const auto n = static_cast<long long>(g.order());
  const long long x0 = pred.x0;
  LowerBoundCertificate cert;
  if (x0 < 1 || x0 > n) return cert;
  if (!alpha0) {
    auto mis = max_sparse_set(g, 0, SparseMode::at_most, budget);
    if (mis && mis->exact) alpha0 = mis->size;
  }
  Lemma1Options options;
  options.independence_number = alpha0;
  options.budget_per_k = budget;
  for (int mu = pred.mu; mu >= 0; --mu) {
    const long long target = pred.base_term + mu;
    if (ceil_half(static_cast<long long>(r - 1) * (n - x0 + 1)) < target) continue;
    if (mu > 0) {
      auto sparse = max_sparse_set(g, static_cast<std::size_t>(mu - 1), SparseMode::at_most, budget);
      if (!sparse || !sparse->exact || static_cast<long long>(sparse->size) >= x0) continue;
    }
    auto report = check_lemma1(g, x0, r, mu, std::min(k_max, g.order()), options);
    if (!report.ok) continue;
    cert.value = target;
    cert.mu_certified = mu;
    cert.full = report.covers_all_k;
    return cert;
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Trials.

Seed trial_seed(const ExperimentConfig& config, std::size_t trial) {
  return Seed{config.master_seed, 0}.derive(trial);
}

namespace {

struct TheoryPoint {
  std::size_t n;
  double p;
  int r;
};

std::vector<TheoryPoint> theory_grid(const ExperimentConfig& c) {
  const auto ns = c.n_grid.empty() ? std::vector<std::size_t>{c.n} : c.n_grid;
  const auto ps = c.p_grid.empty() ? std::vector<double>{c.p} : c.p_grid;
  const auto rs = c.r_grid.empty() ? std::vector<int>{c.r} : c.r_grid;
  std::vector<TheoryPoint> grid;
  for (auto n : ns)
    for (auto p : ps)
      for (auto r : rs) grid.push_back({n, p, r});
  return grid;
}

std::size_t row_count(const ExperimentConfig& c) {
  return c.mode == ExperimentMode::theory_table ? theory_grid(c).size() : c.trials;
}

void fill_prediction(ExperimentRecord& rec, const Prediction& pred) {
  rec.x0 = pred.x0;
  rec.r_prime = pred.r_prime;
  rec.mu = pred.mu;
  rec.predicted = pred.values;
}

void add_issue(ExperimentRecord& rec, const std::string& issue) {
  rec.status = rec.status == "ok" ? issue : rec.status + "; " + issue;
}

std::pair<long long, long long> alpha_window(std::size_t n, double p, double eps) {
  const double a = alpha_p_value(n, p);
  return {static_cast<long long>(std::floor(a - eps)), static_cast<long long>(std::floor(a + eps))};
}

void run_concentration(const ExperimentConfig& c, const Seed& seed, ExperimentRecord& rec, bool exact) {
  const Graph g = sample_gnp(c.n, c.p, seed);
  const Prediction pred = predict(c.theory_params());
  fill_prediction(rec, pred);

  auto mis = max_sparse_set(g, 0, SparseMode::at_most, c.budget);
  std::optional<std::size_t> alpha0;
  if (mis && mis->exact) alpha0 = mis->size;
  if (mis) rec.alpha0 = mis->size;

  if (exact) {
    auto res = sat_exact_structured(g, c.r);
    rec.sat_exact = static_cast<long long>(res.value);
    rec.v1_size = res.witness.V1.count();
    rec.v1_edges = res.witness.v1_edges;
    rec.in_window = std::find(pred.values.begin(), pred.values.end(), *rec.sat_exact) != pred.values.end();
  }

  const std::size_t k_max = c.k_max ? *c.k_max : static_cast<std::size_t>(pred.x0) + c.k_max_offset;
  const auto cert = certify_lower_bound(g, pred, c.r, k_max, c.budget, alpha0);
  if (cert.value) {
    rec.sat_lower = *cert.value;
    rec.mu_certified = cert.mu_certified;
    rec.certificate = cert.full ? "full" : "partial";
  } else {
    rec.certificate = "none";
  }

  try {
    BuildOptions options;
    options.mode = parse_v1_mode(c.v1_mode);
    options.params = c.theory_params();
    options.node_budget = c.budget;
    auto report = build_saturated(g, c.r, options, seed.derive(1));
    rec.sat_upper = static_cast<long long>(report.result.edge_count);
    if (!exact) {
      rec.v1_size = report.result.V1.count();
      rec.v1_edges = report.result.v1_edges;
    }
  } catch (const std::exception& e) {
    add_issue(rec, std::string("construction failed: ") + e.what());
  }

  if (!exact && rec.sat_lower && rec.sat_upper) {
    const long long gap = *rec.sat_upper - *rec.sat_lower;
    rec.in_window = gap == 0 || gap == 1;
  }
  if (rec.sat_lower && rec.sat_upper && *rec.sat_lower > *rec.sat_upper)
    add_issue(rec, "invariant violated: sat_lower > sat_upper");
  if (rec.sat_exact) {
    if (rec.sat_lower && *rec.sat_lower > *rec.sat_exact) add_issue(rec, "invariant violated: sat_lower > sat_exact");
    if (rec.sat_upper && *rec.sat_exact > *rec.sat_upper) add_issue(rec, "invariant violated: sat_exact > sat_upper");
  }
}

void run_alpha(const ExperimentConfig& c, const Seed& seed, ExperimentRecord& rec) {
  const Graph g = sample_gnp(c.n, c.p, seed);
  const auto [lo, hi] = alpha_window(c.n, c.p, c.eps);
  rec.x0 = hi;
  for (long long v = lo; v <= hi; ++v) rec.predicted.push_back(v);
  bool exact = true;
  auto mis = max_sparse_set(g, 0, SparseMode::at_most, c.budget);
  rec.alpha0 = mis->size;
  exact = exact && mis->exact;
  for (std::size_t m = 1; m <= c.alpha_m_max; ++m) {
    auto res = max_sparse_set(g, m, SparseMode::exactly, c.budget);
    rec.alpha_m.push_back(res ? std::optional<std::size_t>(res->size) : std::nullopt);
    if (res) exact = exact && res->exact;
  }
  const auto a0 = static_cast<long long>(*rec.alpha0);
  rec.in_window = a0 >= lo && a0 <= hi;
  if (!exact) add_issue(rec, "search budget exhausted; sizes are lower bounds");
}

void run_phi(const ExperimentConfig& c, const Seed& seed, ExperimentRecord& rec) {
  const Graph g = sample_gnp(c.n, c.p, seed);
  rec.xi = count_sets(g, c.k, c.m);
}

}  // namespace

ExperimentRecord run_trial(const ExperimentConfig& c, std::size_t trial) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.trial = trial;
  rec.n = c.n;
  rec.p = c.p;
  rec.r = c.r;
  try {
    if (c.mode == ExperimentMode::theory_table) {
      const auto grid = theory_grid(c);
      const auto& point = grid.at(trial);
      rec.n = point.n;
      rec.p = point.p;
      rec.r = point.r;
      TheoryParams params = c.theory_params();
      params.n = point.n;
      params.p = point.p;
      params.r = point.r;
      fill_prediction(rec, predict(params));
    } else {
      const Seed seed = trial_seed(c, trial);
      rec.seed = to_string(seed);
      switch (c.mode) {
        case ExperimentMode::concentration_exact: run_concentration(c, seed, rec, true); break;
        case ExperimentMode::concentration_window: run_concentration(c, seed, rec, false); break;
        case ExperimentMode::alpha: run_alpha(c, seed, rec); break;
        case ExperimentMode::phi_validate: run_phi(c, seed, rec); break;
        case ExperimentMode::theory_table: break;
      }
    }
  } catch (const std::exception& e) {
    rec.status = std::string("error: ") + e.what();
  }
  if (c.record_timing)
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t rows = row_count(config);
  ExperimentResult result;
  result.records.resize(rows);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows; i = next++) result.records[i] = run_trial(config, i);
  };
  const std::size_t threads = std::min(config.workers, rows);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.summary = summarize(config, result.records);
  return result;
}

// ---------------------------------------------------------------------------
// Summary.

namespace {

struct Moments {
  std::size_t count = 0;
  double sum = 0, sum_sq = 0;
  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double variance() const {
    if (count < 2) return 0.0;
    const double mu = mean();
    return std::max(0.0, (sum_sq - static_cast<double>(count) * mu * mu) / static_cast<double>(count - 1));
  }
};

std::string join_values(const std::set<long long>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ";") + std::to_string(v);
  return out;
}

double rate(std::size_t hits, std::size_t total) {
  return total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0;
}

}  // namespace

ExperimentSummary summarize(const ExperimentConfig& c, const std::vector<ExperimentRecord>& records) {
  ExperimentSummary s;
  s.trials = records.size();
  for (const auto& rec : records) (rec.status.rfind("error:", 0) == 0 ? s.errors : s.ok) += 1;
  s.notes["mode"] = to_string(c.mode);
  const std::size_t total = records.size();

  switch (c.mode) {
    case ExperimentMode::concentration_exact:
    case ExperimentMode::concentration_window: {
      std::set<long long> support_exact, support_upper;
      Moments exact, lower, upper, gap;
      std::size_t hits = 0, full = 0, partial = 0, none = 0, full_hits = 0, shortfall = 0;
      for (const auto& rec : records) {
        if (rec.sat_exact) {
          support_exact.insert(*rec.sat_exact);
          exact.add(static_cast<double>(*rec.sat_exact));
        }
        if (rec.sat_upper) {
          support_upper.insert(*rec.sat_upper);
          upper.add(static_cast<double>(*rec.sat_upper));
        }
        if (rec.sat_lower) lower.add(static_cast<double>(*rec.sat_lower));
        if (rec.sat_lower && rec.sat_upper) gap.add(static_cast<double>(*rec.sat_upper - *rec.sat_lower));
        const bool hit = rec.in_window.value_or(false);
        hits += hit;
        if (rec.certificate == "full") {
          ++full;
          full_hits += hit;
        } else if (rec.certificate == "partial") {
          ++partial;
        } else if (rec.certificate == "none") {
          ++none;
        }
        if (rec.mu_certified && rec.mu && *rec.mu_certified < *rec.mu) ++shortfall;
      }
      s.metrics["window_hit_rate"] = rate(hits, total);
      s.metrics["full_certificate_hit_rate"] = rate(full_hits, total);
      s.metrics["full_certificates"] = static_cast<double>(full);
      s.metrics["partial_certificates"] = static_cast<double>(partial);
      s.metrics["uncertified"] = static_cast<double>(none);
      s.metrics["mu_shortfall"] = static_cast<double>(shortfall);
      s.metrics["mean_sat_lower"] = lower.mean();
      s.metrics["mean_sat_upper"] = upper.mean();
      s.metrics["mean_gap"] = gap.mean();
      s.notes["sat_upper_support"] = join_values(support_upper);
      if (c.mode == ExperimentMode::concentration_exact) {
        s.metrics["mean_sat_exact"] = exact.mean();
        s.metrics["sat_exact_support_width"] =
            support_exact.empty() ? 0.0 : static_cast<double>(*support_exact.rbegin() - *support_exact.begin() + 1);
        s.notes["sat_exact_support"] = join_values(support_exact);
      }
      if (!records.empty()) {
        std::set<long long> predicted(records.front().predicted.begin(), records.front().predicted.end());
        s.notes["predicted"] = join_values(predicted);
      }
      break;
    }
    case ExperimentMode::alpha: {
      const auto [lo, hi] = alpha_window(c.n, c.p, c.eps);
      s.metrics["alpha_p"] = alpha_p_value(c.n, c.p);
      s.metrics["window_lo"] = static_cast<double>(lo);
      s.metrics["window_hi"] = static_cast<double>(hi);
      Moments a0;
      std::size_t hits = 0, counted = 0;
      std::set<long long> support;
      for (const auto& rec : records) {
        if (!rec.alpha0) continue;
        ++counted;
        a0.add(static_cast<double>(*rec.alpha0));
        support.insert(static_cast<long long>(*rec.alpha0));
        hits += rec.in_window.value_or(false);
      }
      s.metrics["alpha0_hit_rate"] = rate(hits, total);
      s.metrics["mean_alpha0"] = a0.mean();
      s.notes["alpha0_support"] = join_values(support);
      for (std::size_t m = 1; m <= c.alpha_m_max; ++m) {
        std::size_t in_eq = 0, in_pair = 0;
        Moments am;
        std::set<long long> sup;
        for (const auto& rec : records) {
          if (rec.alpha_m.size() < m || !rec.alpha_m[m - 1]) continue;
          const auto v = static_cast<long long>(*rec.alpha_m[m - 1]);
          am.add(static_cast<double>(v));
          sup.insert(v);
          in_eq += v >= lo && v <= hi;
          in_pair += v == hi - 1 || v == hi;
        }
        const std::string key = "alpha" + std::to_string(m);
        s.metrics[key + "_hit_rate"] = rate(in_eq, total);
        s.metrics[key + "_x0_pair_hit_rate"] = rate(in_pair, total);
        s.metrics["mean_" + key] = am.mean();
        s.notes[key + "_support"] = join_values(sup);
      }
      break;
    }
    case ExperimentMode::phi_validate: {
      Moments xi;
      for (const auto& rec : records)
        if (rec.xi) xi.add(static_cast<double>(*rec.xi));
      const auto lp = log_phi(c.n, c.p, c.k, c.m);
      const double phi = lp ? std::exp(*lp) : 0.0;
      const double se = xi.count ? std::sqrt(xi.variance() / static_cast<double>(xi.count)) : 0.0;
      s.metrics["phi"] = phi;
      s.metrics["mean_xi"] = xi.mean();
      s.metrics["sd_xi"] = std::sqrt(xi.variance());
      s.metrics["standard_error"] = se;
      const double diff = std::abs(xi.mean() - phi);
      s.metrics["z_score"] = se > 0 ? diff / se : (diff == 0 ? 0.0 : INFINITY);
      s.metrics["within_4se"] = diff <= 4 * se ? 1.0 : 0.0;
      break;
    }
    case ExperimentMode::theory_table:
      s.metrics["rows"] = static_cast<double>(records.size());
      break;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Output.

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> header = {
      "trial",    "seed",      "n",         "p",         "r",         "x0",       "r_prime",
      "mu",       "predicted", "v1_size",   "v1_edges",  "sat_lower", "sat_upper", "sat_exact",
      "alpha0",   "alpha_m",   "xi",        "in_window", "certificate", "mu_certified", "elapsed_ms",
      "status"};
  return header;
}

namespace {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char ch : raw) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>)
    return *v ? "true" : "false";
  else if constexpr (std::is_floating_point_v<T>) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << *v;
    return os.str();
  } else
    return std::to_string(*v);
}

}  // namespace

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out;
  const auto& header = csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\r\n";
  for (const auto& rec : records) {
    std::string predicted, alpha_m;
    for (auto v : rec.predicted) predicted += (predicted.empty() ? "" : ";") + std::to_string(v);
    for (std::size_t i = 0; i < rec.alpha_m.size(); ++i)
      alpha_m += (i ? ";" : "") + (rec.alpha_m[i] ? std::to_string(*rec.alpha_m[i]) : std::string("NA"));
    const std::vector<std::string> row = {std::to_string(rec.trial),
                                          rec.seed,
                                          std::to_string(rec.n),
                                          format_double(rec.p),
                                          std::to_string(rec.r),
                                          opt(rec.x0),
                                          opt(rec.r_prime),
                                          opt(rec.mu),
                                          predicted,
                                          opt(rec.v1_size),
                                          opt(rec.v1_edges),
                                          opt(rec.sat_lower),
                                          opt(rec.sat_upper),
                                          opt(rec.sat_exact),
                                          opt(rec.alpha0),
                                          alpha_m,
                                          opt(rec.xi),
                                          opt(rec.in_window),
                                          rec.certificate,
                                          opt(rec.mu_certified),
                                          opt(rec.elapsed_ms),
                                          rec.status};
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += "\r\n";
  }
  return out;
}

std::string to_json(const ExperimentSummary& summary) {
  json doc;
  doc["trials"] = summary.trials;
  doc["ok"] = summary.ok;
  doc["errors"] = summary.errors;
  json metrics = json::object();
  for (const auto& [k, v] : summary.metrics) metrics[k] = std::isfinite(v) ? json(v) : json(nullptr);
  doc["metrics"] = metrics;
  doc["notes"] = summary.notes;
  return doc.dump(2) + "\n";
}

std::string plot_script(const ExperimentConfig& c) {
  std::ostringstream gp;
  const std::string stem = c.csv_name.substr(0, c.csv_name.rfind('.'));
  gp << "# Run from the output directory: gnuplot " << c.plot_name << "\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set terminal pngcairo size 900,560\n"
     << "set output '" << stem << ".png'\n"
     << "set style fill solid 0.5\n"
     << "set boxwidth 0.8\n"
     << "set ylabel 'trials'\n";
  auto markers = [&](const std::vector<long long>& values) {
    for (auto v : values)
      gp << "set arrow from " << v << ", graph 0 to " << v << ", graph 1 nohead dashtype 2 lw 2\n";
  };
  const std::string csv = "'" + c.csv_name + "'";
  switch (c.mode) {
    case ExperimentMode::concentration_exact:
    case ExperimentMode::concentration_window: {
      std::vector<long long> values;
      try {
        values = predict(c.theory_params()).values;
      } catch (const std::exception&) {
      }
      const bool exact = c.mode == ExperimentMode::concentration_exact;
      gp << "set title 'sat(G(" << c.n << "," << format_double(c.p) << "), K_{1," << c.r
         << "}): empirical vs predicted (dashed)'\n"
         << "set xlabel 'edges'\n";
      markers(values);
      if (exact)
        gp << "plot " << csv << " using (column('sat_exact')):(1) smooth frequency with boxes title 'sat exact'\n";
      else
        gp << "plot " << csv << " using (column('sat_upper')):(1) smooth frequency with boxes title 'sat upper', \\\n"
           << "     " << csv << " using (column('sat_lower')):(1) smooth frequency with linespoints title 'sat lower'\n";
      break;
    }
    case ExperimentMode::alpha: {
      std::vector<long long> window;
      try {
        const auto [lo, hi] = alpha_window(c.n, c.p, c.eps);
        for (long long v = lo; v <= hi; ++v) window.push_back(v);
      } catch (const std::exception&) {
      }
      gp << "set title 'independence number of G(" << c.n << "," << format_double(c.p)
         << "): empirical vs window (dashed)'\n"
         << "set xlabel 'alpha_0'\n";
      markers(window);
      gp << "plot " << csv << " using (column('alpha0')):(1) smooth frequency with boxes title 'alpha_0'\n";
      break;
    }
    case ExperimentMode::phi_validate: {
      double phi = 0;
      if (auto lp = log_phi(c.n, c.p, c.k, c.m)) phi = std::exp(*lp);
      gp << "set title 'xi_" << c.m << "(" << c.k << ") on G(" << c.n << "," << format_double(c.p)
         << "); expectation dashed'\n"
         << "set xlabel 'count'\n"
         << "set arrow from " << format_double(phi) << ", graph 0 to " << format_double(phi)
         << ", graph 1 nohead dashtype 2 lw 2\n"
         << "plot " << csv << " using (column('xi')):(1) smooth frequency with boxes title 'xi'\n";
      break;
    }
    case ExperimentMode::theory_table:
      gp << "set title 'anchor size x0 over the parameter grid'\n"
         << "set xlabel 'n'\n"
         << "set ylabel 'x0'\n"
         << "plot " << csv << " using (column('n')):(column('x0')) with points pt 7 title 'x0'\n";
      break;
  }
  return gp.str();
}

OutputPaths emit_outputs(const ExperimentConfig& config, const ExperimentResult& result) {
  if (result.records.empty()) throw std::invalid_argument("emit_outputs: no records");
  namespace fs = std::filesystem;
  const fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  OutputPaths paths{(dir / config.csv_name).string(), (dir / config.summary_name).string(),
                    (dir / config.plot_name).string()};
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.close();
    if (!out) throw IoError("error writing " + path);
  };
  write(paths.csv, to_csv(result.records));
  write(paths.summary, to_json(result.summary));
  write(paths.plot, plot_script(config));
  return paths;
}

}  // namespace satstar
