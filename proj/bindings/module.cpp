#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "dpero/baselines.hpp"
#include "dpero/errors.hpp"
#include "dpero/generator.hpp"
#include "dpero/harness.hpp"
#include "dpero/network.hpp"
#include "dpero/oracles.hpp"
#include "dpero/scenario.hpp"
#include "dpero/solver.hpp"

namespace py = pybind11;
using namespace dpero;

namespace {

using EdgeTuple = std::tuple<NodeId, NodeId, double>;

std::vector<EdgeDef> to_edge_defs(const std::vector<EdgeTuple>& edges) {
  std::vector<EdgeDef> defs;
  defs.reserve(edges.size());
  for (const auto& [u, v, t] : edges) defs.push_back(EdgeDef{u, v, t});
  return defs;
}

std::vector<EdgeTuple> to_edge_tuples(const std::vector<EdgeDef>& defs) {
  std::vector<EdgeTuple> edges;
  edges.reserve(defs.size());
  for (const EdgeDef& e : defs) edges.emplace_back(e.source, e.target, e.travel_time);
  return edges;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Risk-aware escape route planning on directed networks";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidPathError>(m, "InvalidPathError",
                                           PyExc_ValueError);
  py::register_exception<NoEscapeRouteError>(m, "NoEscapeRouteError",
                                             PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("risk_cost", &risk_cost, py::arg("p"),
        "Additive node cost -log(1 - p); infinite for p = 1.");

  py::class_<RiskNetwork>(m, "RiskNetwork")
      .def(py::init([](std::size_t node_count,
                       const std::vector<EdgeTuple>& edges,
                       std::vector<double> capture_probs) {
             return RiskNetwork(node_count, to_edge_defs(edges),
                                std::move(capture_probs));
           }),
           py::arg("node_count"), py::arg("edges"), py::arg("capture_probs"))
      .def_property_readonly("node_count", &RiskNetwork::node_count)
      .def_property_readonly("edge_count", &RiskNetwork::edge_count)
      .def("capture_prob", &RiskNetwork::capture_prob, py::arg("node"))
      .def("capture_probs", &RiskNetwork::capture_probs)
      .def("node_risk_cost", &RiskNetwork::node_risk_cost, py::arg("node"))
      .def("has_edge", &RiskNetwork::has_edge, py::arg("source"),
           py::arg("target"))
      .def("out_edges",
           [](const RiskNetwork& net, NodeId v) {
             std::vector<std::pair<NodeId, double>> result;
             for (const Edge& e : net.out_edges(v)) {
               result.emplace_back(e.target, e.travel_time);
             }
             return result;
           },
           py::arg("node"))
      .def("edge_list",
           [](const RiskNetwork& net) { return to_edge_tuples(net.edge_list()); })
      .def("with_capture_probs", &RiskNetwork::with_capture_probs,
           py::arg("capture_probs"));

  m.def("build_network",
        [](std::size_t node_count, const std::vector<EdgeTuple>& edges,
           std::vector<double> capture_probs) {
          return build_network(node_count, to_edge_defs(edges),
                               std::move(capture_probs));
        },
        py::arg("node_count"), py::arg("edges"), py::arg("capture_probs"));

  py::class_<EscapePath>(m, "EscapePath")
      .def_readonly("nodes", &EscapePath::nodes)
      .def_readonly("risk_cost", &EscapePath::risk_cost)
      .def_readonly("survival_prob", &EscapePath::survival_prob)
      .def_readonly("travel_time", &EscapePath::travel_time)
      .def("__repr__", [](const EscapePath& p) {
        return "<EscapePath " + std::to_string(p.nodes.size()) +
               " nodes, survival " + std::to_string(p.survival_prob) + ">";
      });

  m.def("score_path", &score_path, py::arg("network"), py::arg("nodes"));

  py::class_<ValueTable>(m, "ValueTable")
      .def_readonly("cost_to_go", &ValueTable::cost_to_go)
      .def_readonly("policy", &ValueTable::policy)
      .def_readonly("sweeps", &ValueTable::sweeps)
      .def_readonly("converged", &ValueTable::converged)
      .def_readonly("epsilon", &ValueTable::epsilon);

  m.def("value_iteration", &value_iteration, py::arg("network"),
        py::arg("exits"), py::arg("epsilon") = kDefaultEpsilon);
  m.def("extract_path", &extract_path, py::arg("table"), py::arg("network"),
        py::arg("start"));

  m.def("shortest_time_path", &shortest_time_path, py::arg("network"),
        py::arg("start"), py::arg("exits"));
  m.def("dijkstra_risk_oracle",
        [](const RiskNetwork& network, NodeId start,
           const std::vector<NodeId>& exits) {
          const RiskOracleResult result =
              dijkstra_risk_oracle(network, start, exits);
          return std::make_tuple(result.cost, result.path);
        },
        py::arg("network"), py::arg("start"), py::arg("exits"));

  py::class_<GenParams>(m, "GenParams")
      .def(py::init<>())
      .def_readwrite("rows", &GenParams::rows)
      .def_readwrite("cols", &GenParams::cols)
      .def_readwrite("extra_edges", &GenParams::extra_edges)
      .def_readwrite("defender_count", &GenParams::defender_count)
      .def_readwrite("prob_low", &GenParams::prob_low)
      .def_readwrite("prob_high", &GenParams::prob_high)
      .def_readwrite("exit_count", &GenParams::exit_count);

  py::class_<ScenarioSpec>(m, "ScenarioSpec")
      .def(py::init<>())
      .def_readwrite("start", &ScenarioSpec::start)
      .def_readwrite("exits", &ScenarioSpec::exits)
      .def_readwrite("seed", &ScenarioSpec::seed)
      .def_readwrite("gen", &ScenarioSpec::gen);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("network", &Scenario::network)
      .def_readonly("spec", &Scenario::spec);

  m.def("generate_gre", &generate_gre, py::arg("rows"), py::arg("cols"),
        py::arg("extra_edges"), py::arg("seed"));
  m.def("place_defenders", &place_defenders, py::arg("network"),
        py::arg("count"), py::arg("prob_low"), py::arg("prob_high"),
        py::arg("forbidden"), py::arg("seed"));
  m.def("grid_exits", &grid_exits, py::arg("rows"), py::arg("cols"),
        py::arg("exit_count"));
  m.def("make_scenario", &make_scenario, py::arg("params"), py::arg("seed"));

  m.def("save_scenario",
        [](const Scenario& scenario, const std::filesystem::path& file) {
          save_scenario(scenario, file);
        },
        py::arg("scenario"), py::arg("file"));
  m.def("load_scenario",
        [](const std::filesystem::path& file) { return load_scenario(file); },
        py::arg("file"));

  m.def("enumerate_best_path", &enumerate_best_path, py::arg("network"),
        py::arg("start"), py::arg("exits"),
        py::arg("node_limit") = kDefaultEnumerationLimit);
  m.def("monte_carlo_survival",
        [](const RiskNetwork& network, const std::vector<NodeId>& path,
           std::uint64_t trials, std::uint64_t seed) {
          const MonteCarloResult result =
              monte_carlo_survival(network, path, trials, seed);
          return std::make_tuple(result.estimate, result.std_error);
        },
        py::arg("network"), py::arg("path"), py::arg("trials"),
        py::arg("seed"));

  py::class_<ComparisonRecord>(m, "ComparisonRecord")
      .def_readonly("scenario_id", &ComparisonRecord::scenario_id)
      .def_readonly("defender_count", &ComparisonRecord::defender_count)
      .def_readonly("dpero_survival", &ComparisonRecord::dpero_survival)
      .def_readonly("baseline_survival", &ComparisonRecord::baseline_survival)
      .def_readonly("dpero_time", &ComparisonRecord::dpero_time)
      .def_readonly("baseline_time", &ComparisonRecord::baseline_time)
      .def_readonly("dpero_cost", &ComparisonRecord::dpero_cost)
      .def_readonly("sweeps", &ComparisonRecord::sweeps)
      .def_readonly("wall_clock_ms", &ComparisonRecord::wall_clock_ms)
      .def_property_readonly("status", [](const ComparisonRecord& r) {
        return to_string(r.status);
      });

  m.def("run_comparison", &run_comparison, py::arg("network"), py::arg("spec"),
        py::arg("epsilon") = kDefaultEpsilon);
  m.def("sweep_instance_seed", &sweep_instance_seed, py::arg("base_seed"),
        py::arg("defender_count"), py::arg("replication"));
  m.def("sweep",
        [](const GenParams& base, const std::vector<std::uint32_t>& counts,
           std::uint32_t replications, std::uint64_t base_seed,
           double epsilon) {
          SweepParams params;
          params.base = base;
          params.epsilon = epsilon;
          return sweep(params, counts, replications, base_seed);
        },
        py::arg("params"), py::arg("defender_counts"), py::arg("replications"),
        py::arg("base_seed"), py::arg("epsilon") = kDefaultEpsilon);
  m.def("emit_report",
        [](const std::vector<ComparisonRecord>& records,
           const std::filesystem::path& out_dir) {
          const ReportFiles files = emit_report(records, out_dir);
          return std::make_tuple(files.csv, files.summary, files.plot);
        },
        py::arg("records"), py::arg("out_dir"));
}
