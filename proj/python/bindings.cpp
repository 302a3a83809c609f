#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satstar/construct.hpp"
#include "satstar/experiment.hpp"
#include "satstar/graph.hpp"
#include "satstar/saturation.hpp"
#include "satstar/sparse_set.hpp"
#include "satstar/theory.hpp"

namespace py = pybind11;
using namespace satstar;

namespace {

py::dict subgraph_dict(const SaturatedSubgraph& s) {
  py::dict d;
  d["edge_count"] = s.edge_count;
  d["v1"] = s.V1.to_vector();
  d["v2"] = s.V2.to_vector();
  d["v1_edges"] = s.v1_edges;
  d["cross_edges"] = s.cross_edges;
  d["edges"] = s.H.edges();
  return d;
}

SparseMode parse_mode(const std::string& text) {
  if (text == "at-most") return SparseMode::at_most;
  if (text == "exactly") return SparseMode::exactly;
  throw std::invalid_argument("mode must be \"at-most\" or \"exactly\"");
}

}  // namespace

PYBIND11_MODULE(_satstar, m) {
  m.doc() = "Star saturation numbers of graphs";

  static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      py::set_error(config_error, e.what());
    } catch (const IoError& e) {
      py::set_error(PyExc_OSError, e.what());
    } catch (const ParseError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("complete", &Graph::complete)
      .def_static("cycle", &Graph::cycle)
      .def_static("path", &Graph::path)
      .def_static("star", &Graph::star, py::arg("leaves"))
      .def_static("empty", &Graph::empty)
      .def_static("parse", [](const std::string& text) { return parse(text); })
      .def_static("read", &read_graph_file, py::arg("path"))
      .def_static("gnp", [](std::size_t n, double p, std::uint64_t master, std::uint64_t stream) {
        return sample_gnp(n, p, Seed{master, stream});
      }, py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("stream") = 0)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("serialize", [](const Graph& g) { return serialize(g); })
      .def("write", [](const Graph& g, const std::string& path) { write_graph_file(g, path); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("predict", [](std::size_t n, double p, int r, double eps, double eps_prime, double delta) {
    TheoryParams params{n, p, r, eps, eps_prime, delta};
    const auto pred = predict(params);
    py::dict d;
    d["b"] = pred.b;
    d["alpha_p"] = pred.alpha_p;
    d["x0"] = pred.x0;
    d["r_prime"] = pred.r_prime;
    d["mu"] = pred.mu;
    d["case"] = to_string(pred.kase);
    d["base_term"] = pred.base_term;
    d["values"] = pred.values;
    d["boundary_warning"] = pred.boundary_warning;
    d["growth_ok"] = pred.growth_ok;
    return d;
  }, py::arg("n"), py::arg("p"), py::arg("r"), py::arg("eps") = 0.05, py::arg("eps_prime") = 1e-3,
        py::arg("delta") = 0.1);

  m.def("alpha_p", &alpha_p_value, py::arg("n"), py::arg("p"));
  m.def("log_phi", &log_phi, py::arg("n"), py::arg("p"), py::arg("k"), py::arg("m"));

  m.def("max_sparse_set", [](const Graph& g, std::size_t edges, const std::string& mode, std::uint64_t budget)
            -> py::object {
    const auto res = max_sparse_set(g, edges, parse_mode(mode), budget);
    if (!res) return py::none();
    py::dict d;
    d["set"] = res->set;
    d["size"] = res->size;
    d["induced_edges"] = res->induced_edges;
    d["exact"] = res->exact;
    d["nodes"] = res->nodes;
    return d;
  }, py::arg("graph"), py::arg("m"), py::arg("mode") = "at-most", py::arg("budget") = kDefaultNodeBudget);

  m.def("count_sets", &count_sets, py::arg("graph"), py::arg("k"), py::arg("m"));

  m.def("verify", [](const Graph& g, const Graph& h, int r) {
    const auto check = is_star_saturated(g, h, r);
    return py::make_tuple(check.ok, check.violation);
  }, py::arg("graph"), py::arg("subgraph"), py::arg("r"));

  m.def("solve", [](const Graph& g, int r, const std::string& method) {
    if (method != "oracle" && method != "structured")
      throw std::invalid_argument("method must be \"oracle\" or \"structured\"");
    const auto res = method == "oracle" ? sat_exact_oracle(g, r) : sat_exact_structured(g, r);
    auto d = subgraph_dict(res.witness);
    d["value"] = res.value;
    d["proven"] = res.proven;
    return d;
  }, py::arg("graph"), py::arg("r"), py::arg("method") = "structured");

  m.def("sat_generic", [](const Graph& g, const Graph& f) {
    const auto res = sat_oracle_generic(g, f);
    return py::make_tuple(res.value, res.witness.H.edges());
  }, py::arg("graph"), py::arg("pattern"));

  m.def("construct", [](const Graph& g, int r, std::uint64_t seed, const std::string& mode, std::optional<double> p) {
    BuildOptions options;
    options.mode = parse_v1_mode(mode);
    if (p) {
      TheoryParams params;
      params.n = g.order();
      params.p = *p;
      params.r = r;
      options.params = params;
    }
    const auto rep = build_saturated(g, r, options, Seed{seed, 0});
    auto d = subgraph_dict(rep.result);
    d["v1_mode"] = to_string(rep.v1_mode);
    d["parity_case"] = to_string(rep.parity_case);
    d["cross_vertex"] = rep.cross_vertex ? py::cast(*rep.cross_vertex) : py::none();
    d["restarts"] = rep.restarts;
    d["remainder"] = rep.cover.remainder;
    return d;
  }, py::arg("graph"), py::arg("r"), py::arg("seed"), py::arg("mode") = "auto", py::arg("p") = py::none());

  m.def("run_experiment", [](const std::string& config_json, std::optional<std::string> out_dir,
                             std::optional<std::size_t> workers) {
    auto config = parse_experiment_config(config_json);
    if (workers) config.workers = *workers;
    if (out_dir) config.out_dir = *out_dir;
    config.validate();
    ExperimentResult result;
    {
      py::gil_scoped_release release;
      result = run_experiment(config);
    }
    if (out_dir) emit_outputs(config, result);
    return py::make_tuple(to_csv(result.records), to_json(result.summary));
  }, py::arg("config"), py::arg("out_dir") = py::none(), py::arg("workers") = py::none());
}
