#pragma once

#include <vector>

#include "dpero/network.hpp"

namespace dpero {

// Risk-blind router: minimum total travel time from start to the nearest
// exit, ignoring capture probabilities entirely. Ties between exits go to
// the smaller exit id. The result is scored like any other path, so its
// survival probability is directly comparable with the risk-aware solver.
// Throws NoEscapeRouteError when no exit is reachable and ConfigError when
// exits is empty or references missing nodes.
EscapePath shortest_time_path(const RiskNetwork& network, NodeId start,
                              const std::vector<NodeId>& exits);

struct RiskOracleResult {
  double cost = kInfiniteCost;  // +infinity when no exit is reachable
  std::vector<NodeId> path;     // empty when unreachable
};

// Label-setting (Dijkstra-style) solver for the same minimum cumulative
// risk cost objective as value_iteration, run over node costs on the
// reversed graph with every exit seeded at its own cost. Kept independent
// of the value-iteration code path on purpose: the two must agree on every
// instance, which the tests exploit as a cross-check.
RiskOracleResult dijkstra_risk_oracle(const RiskNetwork& network, NodeId start,
                                      const std::vector<NodeId>& exits);

}  // namespace dpero
