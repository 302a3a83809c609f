#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "satstar/construct.hpp"
#include "satstar/experiment.hpp"
#include "satstar/graph.hpp"
#include "satstar/saturation.hpp"
#include "satstar/sparse_set.hpp"
#include "satstar/theory.hpp"

namespace {

using nlohmann::json;
using namespace satstar;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (auto v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

Graph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

json prediction_json(const Prediction& pred) {
  return json{{"b", pred.b},
              {"alpha_p", pred.alpha_p},
              {"x0", pred.x0},
              {"r_prime", pred.r_prime},
              {"mu", pred.mu},
              {"case", to_string(pred.kase)},
              {"base_term", pred.base_term},
              {"values", pred.values},
              {"boundary_warning", pred.boundary_warning},
              {"growth_ok", pred.growth_ok}};
}

void print_table(const json& obj) {
  for (const auto& [key, value] : obj.items()) {
    std::cout << key << ": ";
    if (value.is_string())
      std::cout << value.get<std::string>();
    else
      std::cout << value.dump();
    std::cout << "\n";
  }
}

json subgraph_json(const SaturatedSubgraph& s) {
  return json{{"edge_count", s.edge_count},
              {"v1_size", s.V1.count()},
              {"v1_edges", s.v1_edges},
              {"v2_size", s.V2.count()},
              {"cross_edges", s.cross_edges},
              {"V1", s.V1.to_vector()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star saturation numbers of graphs: exact solvers, constructions and experiments"};
  app.require_subcommand(1);

  // theory
  TheoryParams tp;
  bool as_json = false;
  auto* theory = app.add_subcommand("theory", "Predicted window for sat(G(n,p), K_{1,r})");
  theory->add_option("--n", tp.n, "number of vertices")->required();
  theory->add_option("--p", tp.p, "edge probability")->required();
  theory->add_option("--r", tp.r, "star size")->required();
  theory->add_option("--eps", tp.eps, "epsilon")->capture_default_str();
  theory->add_option("--eps-prime", tp.eps_prime, "epsilon prime")->capture_default_str();
  theory->add_option("--delta", tp.delta, "delta")->capture_default_str();
  theory->add_flag("--json", as_json, "print JSON");

  // alpha
  std::string graph_path, mode_text = "at-most";
  std::size_t m_edges = 0;
  std::uint64_t budget = kDefaultNodeBudget;
  auto* alpha = app.add_subcommand("alpha", "Largest vertex set inducing at most / exactly m edges");
  alpha->add_option("--graph", graph_path, "edge-list file")->required();
  alpha->add_option("--m", m_edges, "edge allowance")->required();
  alpha->add_option("--mode", mode_text, "at-most|exactly")->check(CLI::IsMember({"at-most", "exactly"}));
  alpha->add_option("--budget", budget, "search node budget")->capture_default_str();
  alpha->add_flag("--json", as_json, "print JSON");

  // solve
  int r = 3;
  std::string method = "structured";
  bool witness = false;
  auto* solve = app.add_subcommand("solve", "Exact sat(G, K_{1,r})");
  solve->add_option("--graph", graph_path, "edge-list file")->required();
  solve->add_option("--r", r, "star size")->required();
  solve->add_option("--method", method, "oracle|structured")->check(CLI::IsMember({"oracle", "structured"}));
  solve->add_flag("--json", as_json, "print JSON");
  solve->add_flag("--witness", witness, "print the saturated subgraph as an edge list");

  // construct
  std::uint64_t seed = 0;
  std::string v1_mode = "auto";
  std::optional<double> construct_p;
  auto* construct = app.add_subcommand("construct", "Build a K_{1,r}-saturated subgraph");
  construct->add_option("--graph", graph_path, "edge-list file")->required();
  construct->add_option("--r", r, "star size")->required();
  construct->add_option("--seed", seed, "seed")->required();
  construct->add_option("--mode", v1_mode, "auto|independent|sparse:M")->capture_default_str();
  construct->add_option("--p", construct_p, "edge probability; lets auto mode follow the predicted case");
  construct->add_flag("--json", as_json, "print JSON");
  construct->add_flag("--witness", witness, "print the subgraph as an edge list");

  // verify
  std::string sub_path;
  auto* verify = app.add_subcommand("verify", "Check that H is a K_{1,r}-saturated subgraph of G (exit 1 if not)");
  verify->add_option("--graph", graph_path, "host edge-list file")->required();
  verify->add_option("--subgraph", sub_path, "candidate edge-list file")->required();
  verify->add_option("--r", r, "star size")->required();

  // sample
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t stream = 0;
  std::string out_path;
  auto* sample = app.add_subcommand("sample", "Sample G(n,p) in edge-list format");
  sample->add_option("--n", n, "number of vertices")->required();
  sample->add_option("--p", p, "edge probability")->required();
  sample->add_option("--seed", seed, "master seed")->required();
  sample->add_option("--stream", stream, "stream index")->capture_default_str();
  sample->add_option("--out", out_path, "output file (default stdout)");

  // experiment
  std::string config_path, out_dir;
  std::optional<std::size_t> workers;
  auto* experiment = app.add_subcommand("experiment", "Run a seeded Monte Carlo batch");
  experiment->add_option("--config", config_path, "JSON config")->required();
  experiment->add_option("--out", out_dir, "output directory (overrides out_dir)");
  experiment->add_option("--workers", workers, "worker threads (overrides workers)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (theory->parsed()) {
      tp.validate();
      const auto doc = prediction_json(predict(tp));
      if (as_json)
        std::cout << doc.dump(2) << "\n";
      else
        print_table(doc);
      return kExitOk;
    }

    if (alpha->parsed()) {
      const Graph g = load(graph_path);
      const auto mode = mode_text == "exactly" ? SparseMode::exactly : SparseMode::at_most;
      const auto res = max_sparse_set(g, m_edges, mode, budget);
      json doc = res ? json{{"size", res->size},
                            {"induced_edges", res->induced_edges},
                            {"set", res->set},
                            {"exact", res->exact},
                            {"nodes", res->nodes}}
                     : json{{"size", nullptr}, {"induced_edges", nullptr}, {"set", json::array()}, {"exact", true}};
      if (as_json) {
        std::cout << doc.dump(2) << "\n";
      } else if (res) {
        std::cout << "size: " << res->size << "\nedges: " << res->induced_edges << "\nset: " << join(res->set)
                  << "\nexact: " << (res->exact ? "true" : "false") << "\n";
      } else {
        std::cout << "size: none\nedges: none\nset:\nexact: true\n";
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      const Graph g = load(graph_path);
      const auto res = method == "oracle" ? sat_exact_oracle(g, r) : sat_exact_structured(g, r);
      json doc = subgraph_json(res.witness);
      doc["value"] = res.value;
      doc["method"] = to_string(res.method);
      doc["proven"] = res.proven;
      if (as_json) {
        if (witness) doc["witness"] = serialize(res.witness.H);
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "value: " << res.value << "\nmethod: " << to_string(res.method)
                  << "\nproven: " << (res.proven ? "true" : "false") << "\nv1_size: " << res.witness.V1.count()
                  << "\nv1_edges: " << res.witness.v1_edges << "\ncross_edges: " << res.witness.cross_edges << "\n";
        if (witness) std::cout << serialize(res.witness.H);
      }
      return kExitOk;
    }

    if (construct->parsed()) {
      const Graph g = load(graph_path);
      BuildOptions options;
      options.mode = parse_v1_mode(v1_mode);
      if (construct_p) {
        TheoryParams params;
        params.n = g.order();
        params.p = *construct_p;
        params.r = r;
        options.params = params;
      }
      const auto report = build_saturated(g, r, options, Seed{seed, 0});
      json doc = subgraph_json(report.result);
      doc["v1_mode"] = to_string(report.v1_mode);
      doc["parity_case"] = to_string(report.parity_case);
      doc["cross_vertex"] = report.cross_vertex ? json(*report.cross_vertex) : json(nullptr);
      doc["restarts"] = report.restarts;
      doc["v1_exact"] = report.v1_exact;
      doc["remainder"] = report.cover.remainder;
      doc.erase("V1");
      if (as_json) {
        if (witness) doc["witness"] = serialize(report.result.H);
        std::cout << doc.dump(2) << "\n";
      } else {
        print_table(doc);
        if (witness) std::cout << serialize(report.result.H);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const Graph g = load(graph_path);
      const Graph h = load(sub_path);
      const auto check = is_star_saturated(g, h, r);
      if (check) {
        std::cout << "ok\n";
        return kExitOk;
      }
      std::cout << "violation: " << check.violation << "\n";
      return kExitViolation;
    }

    if (sample->parsed()) {
      const Graph g = sample_gnp(n, p, Seed{seed, stream});
      if (out_path.empty())
        std::cout << serialize(g);
      else
        try {
          write_graph_file(g, out_path);
        } catch (const std::runtime_error& e) {
          throw IoError(e.what());
        }
      return kExitOk;
    }

    if (experiment->parsed()) {
      auto config = load_experiment_config(config_path);
      if (!out_dir.empty()) config.out_dir = out_dir;
      if (workers) config.workers = *workers;
      config.validate();
      const auto result = run_experiment(config);
      const auto paths = emit_outputs(config, result);
      std::cout << to_json(result.summary);
      std::cerr << "wrote " << paths.csv << ", " << paths.summary << ", " << paths.plot << "\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
