#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dpero/network.hpp"
#include "dpero/rng.hpp"

namespace dpero::testing {

// Line s -> a -> d with one risky node in the middle.
//   ids: s = 0, a = 1, d = 2; p_c(a) = 0.3; exit {2}
inline RiskNetwork line_network() {
  return RiskNetwork(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {0.0, 0.3, 0.0});
}

// Diamond with a risky short branch and a safe long one.
//   ids: s = 0, a = 1, b = 2, c = 3, d = 4
//   s -> a -> d (2 hops through p_c(a) = 0.3)
//   s -> b -> c -> d (3 safe hops); exit {4}
inline RiskNetwork diamond_network() {
  return RiskNetwork(
      5, {{0, 1, 1.0}, {1, 4, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}},
      {0.0, 0.3, 0.0, 0.0, 0.0});
}

struct RandomInstance {
  RiskNetwork network;
  NodeId start;
  std::vector<NodeId> exits;
};

// Random directed instance for property tests: 1.5 to 3 arcs per node,
// capture probabilities uniform in [0, max_prob], travel times in [1, 5),
// start fixed at node 0, one or two random exits.
inline RandomInstance make_random_instance(SplitMix64& rng,
                                           std::size_t min_nodes = 4,
                                           std::size_t max_nodes = 12,
                                           double max_prob = 0.6) {
  const std::size_t n = min_nodes + rng.next_below(max_nodes - min_nodes + 1);
  const double density = 1.5 + rng.next_double() * 1.5;
  std::size_t arcs = static_cast<std::size_t>(density * static_cast<double>(n));
  arcs = std::min(arcs, n * (n - 1));

  std::vector<EdgeDef> edges;
  std::unordered_set<std::uint64_t> seen;
  while (edges.size() < arcs) {
    const auto u = static_cast<NodeId>(rng.next_below(n));
    const auto v = static_cast<NodeId>(rng.next_below(n));
    if (u == v) continue;
    const std::uint64_t key = (std::uint64_t{u} << 32) | v;
    if (!seen.insert(key).second) continue;
    edges.push_back(EdgeDef{u, v, 1.0 + rng.next_double() * 4.0});
  }

  std::vector<double> probs(n);
  for (double& p : probs) p = rng.next_double() * max_prob;

  std::vector<NodeId> exits{static_cast<NodeId>(1 + rng.next_below(n - 1))};
  if (rng.next_below(2) == 1) {
    const auto second = static_cast<NodeId>(1 + rng.next_below(n - 1));
    if (second != exits[0]) exits.push_back(second);
  }

  return RandomInstance{RiskNetwork(n, edges, std::move(probs)), 0, exits};
}

// A random simple walk of at most max_len nodes starting anywhere; empty
// when the sampled start has no unvisited successor.
inline std::vector<NodeId> random_simple_path(SplitMix64& rng,
                                              const RiskNetwork& network,
                                              std::size_t max_len) {
  std::vector<NodeId> nodes;
  std::vector<bool> used(network.node_count(), false);
  NodeId v = static_cast<NodeId>(rng.next_below(network.node_count()));
  nodes.push_back(v);
  used[v] = true;
  while (nodes.size() < max_len) {
    std::vector<NodeId> candidates;
    for (const Edge& e : network.out_edges(v)) {
      if (!used[e.target]) candidates.push_back(e.target);
    }
    if (candidates.empty()) break;
    v = candidates[rng.next_below(candidates.size())];
    nodes.push_back(v);
    used[v] = true;
  }
  return nodes;
}

}  // namespace dpero::testing
