#include "dpero/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "dpero/errors.hpp"

namespace dpero {

namespace {

constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

using QueueEntry = std::pair<double, NodeId>;
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                                     std::greater<QueueEntry>>;

void check_exits(const RiskNetwork& network, const std::vector<NodeId>& exits) {
  if (exits.empty()) throw ConfigError("exit set is empty");
  for (NodeId d : exits) {
    if (d >= network.node_count()) {
      throw ConfigError("exit node " + std::to_string(d) +
                        " is not in the network");
    }
  }
}

}  // namespace

EscapePath shortest_time_path(const RiskNetwork& network, NodeId start,
                              const std::vector<NodeId>& exits) {
  check_exits(network, exits);
  if (start >= network.node_count()) {
    throw ConfigError("start node " + std::to_string(start) +
                      " is not in the network");
  }

  const std::size_t n = network.node_count();
  std::vector<double> dist(n, kInfiniteCost);
  std::vector<NodeId> pred(n, kNoNode);
  dist[start] = 0.0;

  // Entries are (distance, node); equal distances pop in node-id order, and
  // relaxation is strict, so the predecessor tree is deterministic.
  MinQueue queue;
  queue.push({0.0, start});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d != dist[u]) continue;  // stale entry
    for (const Edge& e : network.out_edges(u)) {
      const double candidate = d + e.travel_time;
      if (candidate < dist[e.target]) {
        dist[e.target] = candidate;
        pred[e.target] = u;
        queue.push({candidate, e.target});
      }
    }
  }

  NodeId best_exit = kNoNode;
  for (NodeId d : exits) {
    if (std::isinf(dist[d])) continue;
    if (best_exit == kNoNode || dist[d] < dist[best_exit] ||
        (dist[d] == dist[best_exit] && d < best_exit)) {
      best_exit = d;
    }
  }
  if (best_exit == kNoNode) {
    throw NoEscapeRouteError("no exit reachable from node " +
                             std::to_string(start));
  }

  std::vector<NodeId> nodes;
  for (NodeId v = best_exit; v != kNoNode; v = pred[v]) {
    nodes.push_back(v);
  }
  std::reverse(nodes.begin(), nodes.end());
  return score_path(network, nodes);
}

RiskOracleResult dijkstra_risk_oracle(const RiskNetwork& network, NodeId start,
                                      const std::vector<NodeId>& exits) {
  check_exits(network, exits);
  if (start >= network.node_count()) {
    throw ConfigError("start node " + std::to_string(start) +
                      " is not in the network");
  }

  const std::size_t n = network.node_count();
  std::vector<std::vector<NodeId>> reverse(n);
  for (NodeId v = 0; v < n; ++v) {
    for (const Edge& e : network.out_edges(v)) {
      reverse[e.target].push_back(v);
    }
  }

  // Search backwards from the exits; label(v) accumulates node costs, so the
  // predecessor in this search is the successor on the forward route.
  std::vector<double> label(n, kInfiniteCost);
  std::vector<NodeId> successor(n, kNoNode);
  MinQueue queue;
  for (NodeId d : exits) {
    const double seed = network.node_risk_cost(d);
    if (seed < label[d]) {
      label[d] = seed;
      if (std::isfinite(seed)) queue.push({seed, d});
    }
  }
  while (!queue.empty()) {
    const auto [cost, u] = queue.top();
    queue.pop();
    if (cost != label[u]) continue;
    for (NodeId v : reverse[u]) {
      const double candidate = network.node_risk_cost(v) + cost;
      if (candidate < label[v]) {
        label[v] = candidate;
        successor[v] = u;
        queue.push({candidate, v});
      }
    }
  }

  RiskOracleResult result;
  result.cost = label[start];
  if (std::isfinite(result.cost)) {
    for (NodeId v = start; v != kNoNode; v = successor[v]) {
      result.path.push_back(v);
    }
  }
  return result;
}

}  // namespace dpero
