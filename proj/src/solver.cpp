#include "dpero/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>

#include "dpero/errors.hpp"

namespace dpero {

namespace detail {

double bellman_sweep(const RiskNetwork& network,
                     const std::vector<bool>& is_exit,
                     const std::vector<double>& previous,
                     std::vector<double>& next) {
  const std::size_t n = network.node_count();
  double max_change = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    if (is_exit[v]) {
      next[v] = previous[v];
      continue;
    }
    double best = kInfiniteCost;
    for (const Edge& e : network.out_edges(v)) {
      best = std::min(best, previous[e.target]);
    }
    const double updated = network.node_risk_cost(v) + best;
    next[v] = updated;
    if (updated != previous[v]) {
      max_change = std::max(max_change, std::abs(updated - previous[v]));
    }
  }
  return max_change;
}

}  // namespace detail

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::vector<bool> exit_mask(const RiskNetwork& network,
                            const std::vector<NodeId>& exits) {
  if (exits.empty()) throw ConfigError("exit set is empty");
  std::vector<bool> mask(network.node_count(), false);
  for (NodeId d : exits) {
    if (d >= network.node_count()) {
      throw ConfigError("exit node " + std::to_string(d) +
                        " is not in the network");
    }
    mask[d] = true;
  }
  return mask;
}

// Number of policy steps to an exit along minimum-cost routes: a multi-source
// BFS from the exits that only walks arcs (v -> u) where u attains v's best
// successor cost. Every finite-cost node is reached, because its cost was
// propagated from an exit through exactly such arcs.
std::vector<std::uint32_t> steps_to_exit(const RiskNetwork& network,
                                         const std::vector<bool>& is_exit,
                                         const std::vector<double>& cost,
                                         const std::vector<double>& best_next) {
  const std::size_t n = network.node_count();
  std::vector<std::vector<NodeId>> reverse(n);
  for (NodeId v = 0; v < n; ++v) {
    for (const Edge& e : network.out_edges(v)) {
      reverse[e.target].push_back(v);
    }
  }

  std::vector<std::uint32_t> steps(n, kUnreached);
  std::deque<NodeId> frontier;
  for (NodeId v = 0; v < n; ++v) {
    if (is_exit[v]) {
      steps[v] = 0;
      frontier.push_back(v);
    }
  }
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    for (NodeId v : reverse[u]) {
      if (is_exit[v] || steps[v] != kUnreached) continue;
      if (std::isinf(cost[v]) || cost[u] != best_next[v]) continue;
      steps[v] = steps[u] + 1;
      frontier.push_back(v);
    }
  }
  return steps;
}

}  // namespace

ValueTable value_iteration(const RiskNetwork& network,
                           const std::vector<NodeId>& exits, double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  const std::size_t n = network.node_count();
  const std::vector<bool> is_exit = exit_mask(network, exits);

  ValueTable table;
  table.epsilon = epsilon;
  table.cost_to_go.assign(n, kInfiniteCost);
  for (NodeId v = 0; v < n; ++v) {
    if (is_exit[v]) table.cost_to_go[v] = network.node_risk_cost(v);
  }

  // With non-negative node costs the synchronous iteration hits its fixed
  // point within n sweeps; one extra sweep observes no change and stops.
  std::vector<double> previous = table.cost_to_go;
  std::vector<double> next(n);
  for (std::size_t pass = 0; pass < n + 2; ++pass) {
    const double change = detail::bellman_sweep(network, is_exit, previous, next);
    previous.swap(next);
    if (change > 0.0) ++table.sweeps;
    if (change < epsilon) {
      table.converged = true;
      break;
    }
  }
  table.cost_to_go = std::move(previous);

  // Policy extraction. best_next[v] is the smallest successor cost; ties are
  // then broken by fewer remaining steps and finally by node id.
  std::vector<double> best_next(n, kInfiniteCost);
  for (NodeId v = 0; v < n; ++v) {
    if (is_exit[v]) continue;
    for (const Edge& e : network.out_edges(v)) {
      best_next[v] = std::min(best_next[v], table.cost_to_go[e.target]);
    }
  }
  const std::vector<std::uint32_t> steps =
      steps_to_exit(network, is_exit, table.cost_to_go, best_next);

  table.policy.assign(n, std::nullopt);
  for (NodeId v = 0; v < n; ++v) {
    if (is_exit[v] || std::isinf(table.cost_to_go[v])) continue;
    std::uint32_t best_steps = kUnreached;
    NodeId best_id = 0;
    bool found = false;
    for (const Edge& e : network.out_edges(v)) {
      if (table.cost_to_go[e.target] != best_next[v]) continue;
      const std::uint32_t s = steps[e.target];
      if (!found || s < best_steps || (s == best_steps && e.target < best_id)) {
        best_steps = s;
        best_id = e.target;
        found = true;
      }
    }
    if (found) table.policy[v] = best_id;
  }
  return table;
}

EscapePath extract_path(const ValueTable& table, const RiskNetwork& network,
                        NodeId start) {
  if (!table.converged) {
    throw ConfigError("value table is not converged");
  }
  if (start >= network.node_count()) {
    throw ConfigError("start node " + std::to_string(start) +
                      " is not in the network");
  }
  if (std::isinf(table.cost_to_go[start])) {
    throw NoEscapeRouteError("no escape route from node " +
                             std::to_string(start));
  }

  std::vector<NodeId> nodes{start};
  std::unordered_set<NodeId> visited{start};
  NodeId v = start;
  while (table.policy[v].has_value()) {
    v = *table.policy[v];
    if (!visited.insert(v).second || nodes.size() > network.node_count()) {
      throw InternalError("policy cycle detected at node " +
                          std::to_string(v));
    }
    nodes.push_back(v);
  }
  return score_path(network, nodes);
}

}  // namespace dpero
