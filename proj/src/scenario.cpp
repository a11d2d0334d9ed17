#include "dpero/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "dpero/errors.hpp"

namespace dpero {

using json = nlohmann::json;

void validate_scenario(const RiskNetwork& network, const ScenarioSpec& spec) {
  if (spec.exits.empty()) throw ConfigError("scenario has no exits");
  if (spec.start >= network.node_count()) {
    throw ConfigError("start node " + std::to_string(spec.start) +
                      " is not in the network");
  }
  for (NodeId d : spec.exits) {
    if (d >= network.node_count()) {
      throw ConfigError("exit node " + std::to_string(d) +
                        " is not in the network");
    }
    if (d == spec.start) {
      throw ConfigError("start node " + std::to_string(d) + " is an exit");
    }
  }
}

namespace {

json gen_params_to_json(const GenParams& gen) {
  return json{{"generator", "gre"},
              {"rows", gen.rows},
              {"cols", gen.cols},
              {"extra_edges", gen.extra_edges},
              {"defender_count", gen.defender_count},
              {"prob_low", gen.prob_low},
              {"prob_high", gen.prob_high},
              {"exit_count", gen.exit_count}};
}

std::optional<GenParams> gen_params_from_json(const json& meta) {
  if (!meta.is_object() || meta.value("generator", "") != "gre") {
    return std::nullopt;
  }
  GenParams gen;
  gen.rows = meta.at("rows").get<std::uint32_t>();
  gen.cols = meta.at("cols").get<std::uint32_t>();
  gen.extra_edges = meta.at("extra_edges").get<std::uint32_t>();
  gen.defender_count = meta.at("defender_count").get<std::uint32_t>();
  gen.prob_low = meta.at("prob_low").get<double>();
  gen.prob_high = meta.at("prob_high").get<double>();
  gen.exit_count = meta.at("exit_count").get<std::uint32_t>();
  return gen;
}

}  // namespace

void save_scenario(const Scenario& scenario, std::ostream& out) {
  json edges = json::array();
  for (const EdgeDef& e : scenario.network.edge_list()) {
    edges.push_back(json::array({e.source, e.target, e.travel_time}));
  }
  json doc{{"node_count", scenario.network.node_count()},
           {"edges", std::move(edges)},
           {"capture_prob", scenario.network.capture_probs()},
           {"start", scenario.spec.start},
           {"exits", scenario.spec.exits},
           {"seed", scenario.spec.seed}};
  if (scenario.spec.gen.has_value()) {
    doc["meta"] = gen_params_to_json(*scenario.spec.gen);
  }
  out << doc.dump(2) << '\n';
}

void save_scenario(const Scenario& scenario,
                   const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw Error("cannot open " + file.string() + " for writing");
  save_scenario(scenario, out);
  if (!out) throw Error("failed while writing " + file.string());
}

Scenario load_scenario(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario file is not valid JSON: ") +
                      e.what());
  }
  try {
    const auto node_count = doc.at("node_count").get<std::size_t>();
    std::vector<EdgeDef> edges;
    for (const json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw ConfigError("each edge must be [source, target, travel_time]");
      }
      edges.push_back(EdgeDef{e[0].get<NodeId>(), e[1].get<NodeId>(),
                              e[2].get<double>()});
    }
    auto probs = doc.at("capture_prob").get<std::vector<double>>();

    ScenarioSpec spec;
    spec.start = doc.at("start").get<NodeId>();
    spec.exits = doc.at("exits").get<std::vector<NodeId>>();
    std::sort(spec.exits.begin(), spec.exits.end());
    spec.exits.erase(std::unique(spec.exits.begin(), spec.exits.end()),
                     spec.exits.end());
    spec.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("meta")) spec.gen = gen_params_from_json(doc["meta"]);

    Scenario scenario{RiskNetwork(node_count, edges, std::move(probs)),
                      std::move(spec)};
    validate_scenario(scenario.network, scenario.spec);
    return scenario;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed scenario file: ") + e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string() + " for reading");
  return load_scenario(in);
}

}  // namespace dpero
