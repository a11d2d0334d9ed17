#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dpero/scenario.hpp"
#include "dpero/solver.hpp"

namespace dpero {

enum class RouteStatus { kOk, kNoRoute };

std::string to_string(RouteStatus status);

// One head-to-head outcome: the risk-aware solver and the travel-time
// baseline on the same instance. When a route exists, dpero_survival is
// never below baseline_survival and baseline_time never above dpero_time.
struct ComparisonRecord {
  std::string scenario_id;
  std::uint32_t defender_count = 0;
  double dpero_survival = 0.0;
  double baseline_survival = 0.0;
  double dpero_time = 0.0;
  double baseline_time = 0.0;
  double dpero_cost = kInfiniteCost;  // cost-to-go at the start node
  std::size_t sweeps = 0;
  double wall_clock_ms = 0.0;  // solver runtime (value iteration + extraction)
  RouteStatus status = RouteStatus::kOk;
};

// Solves one scenario both ways and fills a record. A scenario without any
// start-to-exit route is not an error here: it comes back with zero
// survivals and status kNoRoute.
ComparisonRecord run_comparison(const RiskNetwork& network,
                                const ScenarioSpec& spec,
                                double epsilon = kDefaultEpsilon);

struct SweepParams {
  GenParams base;  // defender_count is ignored; the sweep supplies it
  double epsilon = kDefaultEpsilon;
};

// Stable per-instance seed: any instance of a sweep can be regenerated in
// isolation from (base_seed, defender_count, replication).
std::uint64_t sweep_instance_seed(std::uint64_t base_seed,
                                  std::uint32_t defender_count,
                                  std::uint32_t replication);

// Generates and compares replications x counts instances. Records come back
// ordered by (defender count ascending, replication ascending) and the whole
// sweep is reproducible bit-for-bit from base_seed; wall_clock_ms is zeroed
// on sweep records so reports never carry run-varying bytes. A failing
// instance aborts the sweep with the offending seed in the error message.
std::vector<ComparisonRecord> sweep(const SweepParams& params,
                                    const std::vector<std::uint32_t>& defender_counts,
                                    std::uint32_t replications,
                                    std::uint64_t base_seed);

struct ReportFiles {
  std::filesystem::path csv;      // one row per record
  std::filesystem::path summary;  // per-defender-count means and stddevs
  std::filesystem::path plot;     // (defender_count, mean survival) series
};

// Writes report.csv, summary.json and plot.csv under out_dir (created if
// missing). Identical records produce identical bytes. Throws Error when the
// directory or a file cannot be written and ConfigError when records is
// empty.
ReportFiles emit_report(const std::vector<ComparisonRecord>& records,
                        const std::filesystem::path& out_dir);

}  // namespace dpero
