#include "dpero/generator.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "dpero/errors.hpp"
#include "dpero/rng.hpp"

namespace dpero {

namespace {

std::uint64_t arc_key(NodeId from, NodeId to) {
  return (static_cast<std::uint64_t>(from) << 32) | to;
}

}  // namespace

RiskNetwork generate_gre(std::uint32_t rows, std::uint32_t cols,
                         std::uint32_t extra_edges, std::uint64_t seed) {
  if (rows < 2 || cols < 2) {
    throw ConfigError("grid must be at least 2x2, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
  const std::uint64_t n = std::uint64_t{rows} * cols;

  std::vector<EdgeDef> edges;
  edges.reserve(2 * (std::size_t{rows} * (cols - 1) + std::size_t{cols} * (rows - 1)) +
                extra_edges);
  std::unordered_set<std::uint64_t> present;
  auto add_arc_pair = [&](NodeId a, NodeId b) {
    edges.push_back(EdgeDef{a, b, 1.0});
    edges.push_back(EdgeDef{b, a, 1.0});
    present.insert(arc_key(a, b));
    present.insert(arc_key(b, a));
  };
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const NodeId id = r * cols + c;
      if (c + 1 < cols) add_arc_pair(id, id + 1);
      if (r + 1 < rows) add_arc_pair(id, id + cols);
    }
  }

  const std::uint64_t capacity = n * (n - 1) - edges.size();
  if (extra_edges > capacity) {
    throw ConfigError("cannot place " + std::to_string(extra_edges) +
                      " extra edges; only " + std::to_string(capacity) +
                      " arcs are free");
  }
  SplitMix64 rng(derive_seed(seed, "gre-extra-edges"));
  for (std::uint32_t k = 0; k < extra_edges; ++k) {
    for (;;) {
      const NodeId u = static_cast<NodeId>(rng.next_below(n));
      const NodeId v = static_cast<NodeId>(rng.next_below(n));
      if (u == v || present.contains(arc_key(u, v))) continue;  // re-sample
      edges.push_back(EdgeDef{u, v, 1.0});
      present.insert(arc_key(u, v));
      break;
    }
  }

  return RiskNetwork(n, edges, std::vector<double>(n, 0.0));
}

RiskNetwork place_defenders(const RiskNetwork& network, std::uint32_t count,
                            double prob_low, double prob_high,
                            const std::vector<NodeId>& forbidden,
                            std::uint64_t seed) {
  if (!(prob_low >= 0.0 && prob_low <= prob_high && prob_high < 1.0)) {
    throw DomainError("capture probability range must satisfy "
                      "0 <= prob_low <= prob_high < 1");
  }
  std::vector<bool> blocked(network.node_count(), false);
  for (NodeId v : forbidden) {
    if (v >= network.node_count()) {
      throw ConfigError("forbidden node " + std::to_string(v) +
                        " is not in the network");
    }
    blocked[v] = true;
  }
  std::vector<NodeId> eligible;
  eligible.reserve(network.node_count());
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (!blocked[v]) eligible.push_back(v);
  }
  if (count > eligible.size()) {
    throw ConfigError("cannot place " + std::to_string(count) +
                      " defenders on " + std::to_string(eligible.size()) +
                      " eligible nodes");
  }

  // Partial Fisher-Yates: the first k picks are the same for any count >= k.
  SplitMix64 positions(derive_seed(seed, "defender-positions"));
  SplitMix64 probabilities(derive_seed(seed, "defender-probabilities"));
  std::vector<double> probs = network.capture_probs();
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::size_t j = i + positions.next_below(eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
    probs[eligible[i]] = probabilities.next_double(prob_low, prob_high);
  }
  return network.with_capture_probs(std::move(probs));
}

std::vector<NodeId> grid_exits(std::uint32_t rows, std::uint32_t cols,
                               std::uint32_t exit_count) {
  if (exit_count == 0) throw ConfigError("at least one exit is required");
  const std::uint32_t last_row = rows - 1;
  if (exit_count == 1) {
    return {last_row * cols + (cols - 1)};  // corner opposite the start
  }
  if (exit_count > cols) {
    throw ConfigError("a " + std::to_string(cols) + "-column grid cannot " +
                      "hold " + std::to_string(exit_count) +
                      " distinct exits");
  }
  std::vector<NodeId> exits;
  exits.reserve(exit_count);
  for (std::uint32_t k = 0; k < exit_count; ++k) {
    const std::uint32_t col =
        static_cast<std::uint32_t>(std::uint64_t{k} * (cols - 1) / (exit_count - 1));
    exits.push_back(last_row * cols + col);
  }
  return exits;
}

Scenario make_scenario(const GenParams& params, std::uint64_t seed) {
  RiskNetwork network =
      generate_gre(params.rows, params.cols, params.extra_edges, seed);

  ScenarioSpec spec;
  spec.start = 0;
  spec.exits = grid_exits(params.rows, params.cols, params.exit_count);
  spec.seed = seed;
  spec.gen = params;

  std::vector<NodeId> forbidden = spec.exits;
  forbidden.push_back(spec.start);
  network = place_defenders(network, params.defender_count, params.prob_low,
                            params.prob_high, forbidden, seed);

  Scenario scenario{std::move(network), std::move(spec)};
  validate_scenario(scenario.network, scenario.spec);
  return scenario;
}

}  // namespace dpero
