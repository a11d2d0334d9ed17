#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dpero/network.hpp"

namespace dpero {

constexpr double kDefaultEpsilon = 1e-9;

// Converged cost-to-go values and the greedy successor policy.
//
// cost_to_go[v] is the minimum cumulative risk cost from v to the nearest
// exit (counting both endpoints), +infinity when no exit is reachable.
// policy[v] is the next node of an optimal route; empty for exits and for
// nodes with infinite cost. Following policy from any finite-cost node
// reaches an exit in at most node_count steps.
struct ValueTable {
  std::vector<double> cost_to_go;
  std::vector<std::optional<NodeId>> policy;
  std::size_t sweeps = 0;  // sweeps that changed at least one value
  bool converged = false;
  double epsilon = kDefaultEpsilon;
};

namespace detail {

// One synchronous Bellman sweep: next[v] = w(v) + min over successors of
// previous[target] for every non-exit v; exits are carried over unchanged.
// Returns the largest per-node change, where an infinite value staying
// infinite counts as no change. Exposed so the convergence tests can drive
// the iteration one sweep at a time.
double bellman_sweep(const RiskNetwork& network,
                     const std::vector<bool>& is_exit,
                     const std::vector<double>& previous,
                     std::vector<double>& next);

}  // namespace detail

// Synchronous value iteration for the minimum cumulative risk cost.
//
// Costs start at +infinity everywhere except the exits, which are pinned to
// their own node risk cost and never updated. Sweeps repeat until the
// largest per-node change falls below epsilon; with non-negative node costs
// that happens within node_count sweeps. The returned policy breaks ties
// between equal-cost successors by the smaller number of remaining policy
// steps, then the smaller node id, which makes it deterministic and free of
// cycles even across zero-cost regions.
//
// Throws ConfigError if exits is empty, references missing nodes, or
// epsilon is not positive.
ValueTable value_iteration(const RiskNetwork& network,
                           const std::vector<NodeId>& exits,
                           double epsilon = kDefaultEpsilon);

// Follows the policy from start until an exit and scores the traversed
// path. Throws NoEscapeRouteError when cost_to_go[start] is infinite, and
// ConfigError when the table is not converged. A repeated node while
// following the policy would mean the solver's no-cycle guarantee broke;
// that is reported as InternalError.
EscapePath extract_path(const ValueTable& table, const RiskNetwork& network,
                        NodeId start);

}  // namespace dpero
