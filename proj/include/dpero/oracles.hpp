#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dpero/network.hpp"

namespace dpero {

// Largest network enumerate_best_path will accept by default. Keeps the
// worst-case simple-path count on dense graphs within reach.
constexpr std::size_t kDefaultEnumerationLimit = 14;

// Brute-force reference: depth-first enumeration of every simple path from
// start to an exit (exits are terminal), returning the one with the highest
// survival probability. Ties go to the shorter path, then the
// lexicographically smaller node sequence. Independent of the solver on
// purpose; the tests compare the two.
// Throws ConfigError when the network is larger than node_limit and
// NoEscapeRouteError when no path exists.
EscapePath enumerate_best_path(const RiskNetwork& network, NodeId start,
                               const std::vector<NodeId>& exits,
                               std::size_t node_limit = kDefaultEnumerationLimit);

struct MonteCarloResult {
  double estimate = 0.0;   // surviving fraction
  double std_error = 0.0;  // sqrt(estimate * (1 - estimate) / trials)
};

// Simulates `trials` traversals of the path; at every node an independent
// uniform draw below the node's capture probability means capture. Each
// trial uses its own substream derived from (seed, trial index), so the
// result is identical however trials are batched. Throws InvalidPathError
// for sequences that are not simple connected paths and ConfigError when
// trials is zero.
MonteCarloResult monte_carlo_survival(const RiskNetwork& network,
                                      const std::vector<NodeId>& path,
                                      std::uint64_t trials,
                                      std::uint64_t seed);

}  // namespace dpero
