#pragma once

#include <cstdint>
#include <vector>

#include "dpero/scenario.hpp"

namespace dpero {

// Grid-with-random-edges network: a rows x cols 4-connected lattice where
// every lattice adjacency contributes one arc in each direction (travel
// time 1), plus extra_edges additional random arcs between distinct,
// not-already-connected node pairs. All capture probabilities start at 0.
// Node (r, c) has id r * cols + c. Deterministic per seed; the random arcs
// draw from their own named stream, so the same seed yields the same
// topology no matter what is placed on it later.
// Throws ConfigError for grids smaller than 2x2 or when extra_edges exceeds
// the number of placeable arcs.
RiskNetwork generate_gre(std::uint32_t rows, std::uint32_t cols,
                         std::uint32_t extra_edges, std::uint64_t seed);

// Copy of network where exactly `count` distinct nodes outside `forbidden`
// get a capture probability drawn uniformly from [prob_low, prob_high];
// every other node keeps its current value. Positions and probabilities
// come from independent named streams of `seed`. Deterministic per seed,
// and the first k placements for a given seed do not depend on count.
// Throws ConfigError when count exceeds the eligible nodes and DomainError
// unless 0 <= prob_low <= prob_high < 1.
RiskNetwork place_defenders(const RiskNetwork& network, std::uint32_t count,
                            double prob_low, double prob_high,
                            const std::vector<NodeId>& forbidden,
                            std::uint64_t seed);

// Exit ids for a rows x cols grid: exit_count nodes evenly spaced along the
// last row, columns floor(k * (cols - 1) / (exit_count - 1)). A single exit
// sits at the far corner. Requires exit_count <= cols so the columns stay
// distinct.
std::vector<NodeId> grid_exits(std::uint32_t rows, std::uint32_t cols,
                               std::uint32_t exit_count);

// Full experiment instance: GRE network, start at corner (0, 0), exits
// along the opposite border, defenders placed anywhere else.
Scenario make_scenario(const GenParams& params, std::uint64_t seed);

}  // namespace dpero
