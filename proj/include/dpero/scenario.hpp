#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dpero/network.hpp"

namespace dpero {

// Parameters a generated scenario was built from. Carried in the scenario
// file's meta block so any instance can be regenerated from its seed.
struct GenParams {
  std::uint32_t rows = 15;
  std::uint32_t cols = 15;
  std::uint32_t extra_edges = 0;
  std::uint32_t defender_count = 0;
  double prob_low = 0.2;
  double prob_high = 0.5;
  std::uint32_t exit_count = 5;

  bool operator==(const GenParams&) const = default;
};

struct ScenarioSpec {
  NodeId start = 0;
  std::vector<NodeId> exits;  // non-empty, ascending, never contains start
  std::uint64_t seed = 0;
  std::optional<GenParams> gen;
};

struct Scenario {
  RiskNetwork network;
  ScenarioSpec spec;
};

// Checks that start and every exit exist, exits is non-empty and the start
// is not an exit. Throws ConfigError otherwise.
void validate_scenario(const RiskNetwork& network, const ScenarioSpec& spec);

// Scenario file I/O. The format is a JSON document:
//
//   {
//     "node_count": 4,
//     "edges": [[0, 1, 1.0], ...],          // [source, target, travel_time]
//     "capture_prob": [0.0, 0.3, ...],      // one entry per node, in [0, 1]
//     "start": 0,
//     "exits": [3],
//     "seed": 42,                           // optional
//     "meta": { ... }                       // optional, free form
//   }
//
// Probabilities are plain decimal literals; a certain capture is stored as
// 1.0, never as an infinity. Writing is deterministic: the same scenario
// always produces identical bytes.
void save_scenario(const Scenario& scenario, std::ostream& out);
void save_scenario(const Scenario& scenario, const std::filesystem::path& file);
Scenario load_scenario(std::istream& in);
Scenario load_scenario(const std::filesystem::path& file);

}  // namespace dpero
