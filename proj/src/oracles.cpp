#include "dpero/oracles.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dpero/errors.hpp"
#include "dpero/rng.hpp"

namespace dpero {

namespace {

struct Enumerator {
  const RiskNetwork& network;
  const std::vector<bool>& is_exit;
  std::vector<NodeId> current = {};
  std::vector<bool> on_path = {};
  double current_survival = 1.0;

  std::vector<NodeId> best = {};
  double best_survival = -1.0;

  void visit(NodeId v) {
    current.push_back(v);
    on_path[v] = true;
    const double kept = current_survival;
    current_survival *= 1.0 - network.capture_prob(v);

    if (is_exit[v]) {
      consider();
    } else {
      for (const Edge& e : network.out_edges(v)) {
        if (!on_path[e.target]) visit(e.target);
      }
    }

    current_survival = kept;
    on_path[v] = false;
    current.pop_back();
  }

  void consider() {
    if (current_survival > best_survival) {
      best = current;
      best_survival = current_survival;
      return;
    }
    if (current_survival < best_survival) return;
    if (current.size() < best.size() ||
        (current.size() == best.size() && current < best)) {
      best = current;
    }
  }
};

}  // namespace

EscapePath enumerate_best_path(const RiskNetwork& network, NodeId start,
                               const std::vector<NodeId>& exits,
                               std::size_t node_limit) {
  if (network.node_count() > node_limit) {
    throw ConfigError("network has " + std::to_string(network.node_count()) +
                      " nodes; exhaustive enumeration is limited to " +
                      std::to_string(node_limit));
  }
  if (exits.empty()) throw ConfigError("exit set is empty");
  if (start >= network.node_count()) {
    throw ConfigError("start node " + std::to_string(start) +
                      " is not in the network");
  }
  std::vector<bool> is_exit(network.node_count(), false);
  for (NodeId d : exits) {
    if (d >= network.node_count()) {
      throw ConfigError("exit node " + std::to_string(d) +
                        " is not in the network");
    }
    is_exit[d] = true;
  }

  Enumerator search{network, is_exit};
  search.on_path.assign(network.node_count(), false);
  search.visit(start);
  if (search.best_survival < 0.0) {
    throw NoEscapeRouteError("no path from node " + std::to_string(start) +
                             " to any exit");
  }
  return score_path(network, search.best);
}

MonteCarloResult monte_carlo_survival(const RiskNetwork& network,
                                      const std::vector<NodeId>& path,
                                      std::uint64_t trials,
                                      std::uint64_t seed) {
  if (trials == 0) throw ConfigError("at least one trial is required");
  score_path(network, path);  // throws InvalidPathError on a bad sequence

  std::uint64_t survived = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 draw(derive_seed(seed, "mc-trial", t));
    bool captured = false;
    for (NodeId v : path) {
      if (draw.next_double() < network.capture_prob(v)) {
        captured = true;
        break;
      }
    }
    if (!captured) ++survived;
  }

  MonteCarloResult result;
  result.estimate = static_cast<double>(survived) / static_cast<double>(trials);
  result.std_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) /
                static_cast<double>(trials));
  return result;
}

}  // namespace dpero
