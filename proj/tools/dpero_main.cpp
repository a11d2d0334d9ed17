// dpero command line tool.
//
// Subcommands: generate, solve, baseline, compare, sweep, verify. All
// outputs are JSON (or CSV for sweep reports); failures print one
// machine-readable JSON line on stderr and exit nonzero.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dpero/baselines.hpp"
#include "dpero/errors.hpp"
#include "dpero/generator.hpp"
#include "dpero/harness.hpp"
#include "dpero/oracles.hpp"
#include "dpero/rng.hpp"
#include "dpero/scenario.hpp"
#include "dpero/solver.hpp"

namespace {

using dpero::ComparisonRecord;
using dpero::EscapePath;
using dpero::GenParams;
using dpero::NodeId;
using dpero::Scenario;
using dpero::ValueTable;
using json = nlohmann::json;

struct Options {
  std::uint64_t seed = 1;
  double epsilon = dpero::kDefaultEpsilon;
  GenParams gen;
  std::vector<std::uint32_t> counts = {5, 10, 15, 20, 25};
  std::uint32_t replications = 100;
  std::uint64_t trials = 100000;
  std::string input;
  std::string out;
};

void add_generation_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--rows", opt.gen.rows, "Grid rows")->capture_default_str();
  cmd->add_option("--cols", opt.gen.cols, "Grid columns")->capture_default_str();
  cmd->add_option("--extra-edges", opt.gen.extra_edges,
                  "Additional random arcs beyond the lattice")
      ->capture_default_str();
  cmd->add_option("--prob-low", opt.gen.prob_low,
                  "Lower bound of the defender capture probability")
      ->capture_default_str();
  cmd->add_option("--prob-high", opt.gen.prob_high,
                  "Upper bound of the defender capture probability")
      ->capture_default_str();
  cmd->add_option("--exits", opt.gen.exit_count,
                  "Number of exits on the far border")
      ->capture_default_str();
}

json path_to_json(const EscapePath& path) {
  return json{{"nodes", path.nodes},
              {"risk_cost", path.risk_cost},
              {"survival_prob", path.survival_prob},
              {"travel_time", path.travel_time}};
}

json value_table_to_json(const ValueTable& table) {
  json rows = json::array();
  for (NodeId v = 0; v < table.cost_to_go.size(); ++v) {
    json row{{"node", v}, {"cost", table.cost_to_go[v]}};
    if (table.policy[v].has_value()) {
      row["policy"] = *table.policy[v];
    } else {
      row["policy"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json record_to_json(const ComparisonRecord& r) {
  return json{{"scenario_id", r.scenario_id},
              {"defender_count", r.defender_count},
              {"dpero_survival", r.dpero_survival},
              {"baseline_survival", r.baseline_survival},
              {"dpero_time", r.dpero_time},
              {"baseline_time", r.baseline_time},
              {"dpero_cost", r.dpero_cost},
              {"sweeps", r.sweeps},
              {"wall_clock_ms", r.wall_clock_ms},
              {"status", dpero::to_string(r.status)}};
}

void write_output(const json& doc, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw dpero::Error("cannot write " + out);
  file << doc.dump(2) << '\n';
}

Scenario load_input(const std::string& input) {
  if (input == "-") return dpero::load_scenario(std::cin);
  return dpero::load_scenario(std::filesystem::path(input));
}

int cmd_generate(const Options& opt) {
  const Scenario scenario = dpero::make_scenario(opt.gen, opt.seed);
  if (opt.out.empty() || opt.out == "-") {
    dpero::save_scenario(scenario, std::cout);
  } else {
    dpero::save_scenario(scenario, std::filesystem::path(opt.out));
  }
  return 0;
}

int cmd_solve(const Options& opt) {
  const Scenario scenario = load_input(opt.input);
  const ValueTable table =
      dpero::value_iteration(scenario.network, scenario.spec.exits, opt.epsilon);
  const EscapePath path =
      dpero::extract_path(table, scenario.network, scenario.spec.start);
  json doc{{"path", path_to_json(path)},
           {"sweeps", table.sweeps},
           {"converged", table.converged},
           {"epsilon", table.epsilon},
           {"value_table", value_table_to_json(table)}};
  write_output(doc, opt.out);
  return 0;
}

int cmd_baseline(const Options& opt) {
  const Scenario scenario = load_input(opt.input);
  const EscapePath path = dpero::shortest_time_path(
      scenario.network, scenario.spec.start, scenario.spec.exits);
  write_output(json{{"path", path_to_json(path)}}, opt.out);
  return 0;
}

int cmd_compare(const Options& opt) {
  const Scenario scenario = load_input(opt.input);
  const ComparisonRecord record =
      dpero::run_comparison(scenario.network, scenario.spec, opt.epsilon);
  write_output(record_to_json(record), opt.out);
  return 0;
}

int cmd_sweep(const Options& opt) {
  dpero::SweepParams params;
  params.base = opt.gen;
  params.epsilon = opt.epsilon;
  const auto records =
      dpero::sweep(params, opt.counts, opt.replications, opt.seed);
  const auto files = dpero::emit_report(records, opt.out);
  json doc{{"instances", records.size()},
           {"csv", files.csv.string()},
           {"summary", files.summary.string()},
           {"plot", files.plot.string()}};
  std::cout << doc.dump(2) << '\n';
  return 0;
}

// Runs every applicable cross-check on one scenario: the label-setting
// oracle always, exhaustive enumeration when the instance is small enough,
// Monte Carlo plus a policy walk when a route exists.
int cmd_verify(const Options& opt) {
  const Scenario scenario = load_input(opt.input);
  const auto& network = scenario.network;
  const auto& spec = scenario.spec;

  json checks = json::array();
  bool all_ok = true;
  auto add_check = [&](const std::string& name, bool ok, json detail) {
    detail["name"] = name;
    detail["status"] = ok ? "pass" : "fail";
    checks.push_back(std::move(detail));
    all_ok = all_ok && ok;
  };

  const ValueTable table =
      dpero::value_iteration(network, spec.exits, opt.epsilon);
  const double cost = table.cost_to_go[spec.start];
  const bool has_route = std::isfinite(cost);

  {
    const auto oracle = dpero::dijkstra_risk_oracle(network, spec.start, spec.exits);
    const bool ok = (std::isinf(cost) && std::isinf(oracle.cost)) ||
                    std::abs(cost - oracle.cost) <= 1e-12;
    add_check("dijkstra-oracle", ok,
              {{"solver_cost", cost}, {"oracle_cost", oracle.cost}});
  }

  if (network.node_count() <= dpero::kDefaultEnumerationLimit) {
    bool ok = false;
    json detail;
    try {
      const EscapePath best =
          dpero::enumerate_best_path(network, spec.start, spec.exits);
      ok = has_route &&
           std::abs(std::exp(-cost) - best.survival_prob) <= 1e-12;
      detail = {{"solver_survival", std::exp(-cost)},
                {"oracle_survival", best.survival_prob}};
    } catch (const dpero::NoEscapeRouteError&) {
      ok = !has_route;
      detail = {{"oracle_survival", nullptr}};
    }
    add_check("exhaustive-oracle", ok, std::move(detail));
  }

  if (has_route) {
    const EscapePath path = dpero::extract_path(table, network, spec.start);

    const bool within = path.nodes.size() <= network.node_count();
    const bool cost_match = std::abs(path.risk_cost - cost) <= 1e-9;
    add_check("policy-walk", within && cost_match,
              {{"path_length", path.nodes.size()},
               {"path_cost", path.risk_cost},
               {"cost_to_go", cost}});

    const auto mc = dpero::monte_carlo_survival(
        network, path.nodes, opt.trials, dpero::derive_seed(opt.seed, "verify-mc"));
    const double deviation = std::abs(mc.estimate - path.survival_prob);
    add_check("monte-carlo", deviation <= 4.0 * mc.std_error + 1e-12,
              {{"estimate", mc.estimate},
               {"std_error", mc.std_error},
               {"analytic", path.survival_prob},
               {"trials", opt.trials}});

    const EscapePath baseline =
        dpero::shortest_time_path(network, spec.start, spec.exits);
    add_check("dominance", path.survival_prob >= baseline.survival_prob,
              {{"dpero_survival", path.survival_prob},
               {"baseline_survival", baseline.survival_prob}});
  }

  json doc{{"checks", std::move(checks)}, {"status", all_ok ? "pass" : "fail"}};
  write_output(doc, opt.out);
  return all_ok ? 0 : 1;
}

int error_line(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Risk-aware escape route planning on directed networks"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a grid scenario and write it as JSON");
  add_generation_flags(generate, opt);
  generate->add_option("--defenders", opt.gen.defender_count,
                       "Number of defended nodes")
      ->capture_default_str();
  generate->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  generate->add_option("--out", opt.out, "Output file (default stdout)");

  auto add_scenario_commands = [&](CLI::App* cmd, bool with_epsilon) {
    cmd->add_option("scenario", opt.input, "Scenario file ('-' for stdin)")
        ->required();
    cmd->add_option("--out", opt.out, "Output file (default stdout)");
    if (with_epsilon) {
      cmd->add_option("--epsilon", opt.epsilon, "Convergence threshold")
          ->capture_default_str();
    }
  };

  CLI::App* solve = app.add_subcommand(
      "solve", "Compute the safest escape route and the value table");
  add_scenario_commands(solve, true);

  CLI::App* baseline = app.add_subcommand(
      "baseline", "Compute the risk-blind shortest travel time route");
  add_scenario_commands(baseline, false);

  CLI::App* compare = app.add_subcommand(
      "compare", "Solve one scenario with both routers and report");
  add_scenario_commands(compare, true);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run a defender-count sweep and write report files");
  add_generation_flags(sweep, opt);
  sweep->add_option("--counts", opt.counts, "Defender counts to sweep")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--replications", opt.replications,
                    "Instances per defender count")
      ->capture_default_str();
  sweep->add_option("--seed", opt.seed, "Base RNG seed")->capture_default_str();
  sweep->add_option("--epsilon", opt.epsilon, "Convergence threshold")
      ->capture_default_str();
  sweep->add_option("--out", opt.out, "Report directory")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check a scenario against the independent oracles");
  add_scenario_commands(verify, true);
  verify->add_option("--trials", opt.trials, "Monte Carlo trials")
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "RNG seed for the Monte Carlo check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::ostringstream msg;
    msg << e.what();
    return error_line("usage", msg.str());
  }

  try {
    if (generate->parsed()) return cmd_generate(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (baseline->parsed()) return cmd_baseline(opt);
    if (compare->parsed()) return cmd_compare(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const dpero::DomainError& e) {
    return error_line("domain", e.what());
  } catch (const dpero::InvalidPathError& e) {
    return error_line("invalid-path", e.what());
  } catch (const dpero::NoEscapeRouteError& e) {
    return error_line("no-escape-route", e.what());
  } catch (const dpero::ConfigError& e) {
    return error_line("config", e.what());
  } catch (const dpero::Error& e) {
    return error_line("io", e.what());
  } catch (const std::exception& e) {
    return error_line("internal", e.what());
  }
  return 0;
}
