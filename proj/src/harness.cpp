#include "dpero/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>
#include <utility>

#include <nlohmann/json.hpp>

#include "dpero/baselines.hpp"
#include "dpero/errors.hpp"
#include "dpero/generator.hpp"
#include "dpero/rng.hpp"

namespace dpero {

using json = nlohmann::json;

std::string to_string(RouteStatus status) {
  return status == RouteStatus::kOk ? "ok" : "no-route";
}

namespace {

std::string hex16(std::uint64_t v) {
  char buf[17];
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[v & 0xf];
    v >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

std::string scenario_id(const ScenarioSpec& spec) {
  std::string id;
  if (spec.gen.has_value()) {
    const GenParams& g = *spec.gen;
    id = "gre-" + std::to_string(g.rows) + "x" + std::to_string(g.cols) +
         "-x" + std::to_string(g.extra_edges) + "-d" +
         std::to_string(g.defender_count);
  } else {
    id = "custom";
  }
  return id + "-s" + hex16(spec.seed);
}

// Shortest decimal that round-trips; deterministic across runs.
std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw InternalError("double formatting failed");
  return std::string(buf, end);
}

struct SurvivalStats {
  std::size_t count = 0;
  double dpero_mean = 0.0;
  double dpero_stddev = 0.0;
  double baseline_mean = 0.0;
  double baseline_stddev = 0.0;
};

std::map<std::uint32_t, SurvivalStats> aggregate(
    const std::vector<ComparisonRecord>& records) {
  std::map<std::uint32_t, std::vector<const ComparisonRecord*>> groups;
  for (const ComparisonRecord& r : records) {
    groups[r.defender_count].push_back(&r);
  }
  std::map<std::uint32_t, SurvivalStats> stats;
  for (const auto& [count, group] : groups) {
    SurvivalStats s;
    s.count = group.size();
    for (const ComparisonRecord* r : group) {
      s.dpero_mean += r->dpero_survival;
      s.baseline_mean += r->baseline_survival;
    }
    s.dpero_mean /= static_cast<double>(s.count);
    s.baseline_mean /= static_cast<double>(s.count);
    if (s.count > 1) {
      double dp = 0.0;
      double bl = 0.0;
      for (const ComparisonRecord* r : group) {
        dp += (r->dpero_survival - s.dpero_mean) *
              (r->dpero_survival - s.dpero_mean);
        bl += (r->baseline_survival - s.baseline_mean) *
              (r->baseline_survival - s.baseline_mean);
      }
      s.dpero_stddev = std::sqrt(dp / static_cast<double>(s.count - 1));
      s.baseline_stddev = std::sqrt(bl / static_cast<double>(s.count - 1));
    }
    stats.emplace(count, s);
  }
  return stats;
}

}  // namespace

ComparisonRecord run_comparison(const RiskNetwork& network,
                                const ScenarioSpec& spec, double epsilon) {
  validate_scenario(network, spec);

  ComparisonRecord record;
  record.scenario_id = scenario_id(spec);
  record.defender_count =
      spec.gen.has_value() ? spec.gen->defender_count : 0;

  const auto t0 = std::chrono::steady_clock::now();
  const ValueTable table = value_iteration(network, spec.exits, epsilon);
  record.sweeps = table.sweeps;
  record.dpero_cost = table.cost_to_go[spec.start];

  if (std::isinf(record.dpero_cost)) {
    record.wall_clock_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    record.status = RouteStatus::kNoRoute;
    return record;
  }

  const EscapePath dpero = extract_path(table, network, spec.start);
  record.wall_clock_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
  const EscapePath baseline = shortest_time_path(network, spec.start, spec.exits);

  record.dpero_survival = dpero.survival_prob;
  record.dpero_time = dpero.travel_time;
  record.baseline_survival = baseline.survival_prob;
  record.baseline_time = baseline.travel_time;
  return record;
}

std::uint64_t sweep_instance_seed(std::uint64_t base_seed,
                                  std::uint32_t defender_count,
                                  std::uint32_t replication) {
  return derive_seed(base_seed, "sweep-instance", defender_count, replication);
}

std::vector<ComparisonRecord> sweep(const SweepParams& params,
                                    const std::vector<std::uint32_t>& defender_counts,
                                    std::uint32_t replications,
                                    std::uint64_t base_seed) {
  if (defender_counts.empty()) throw ConfigError("no defender counts given");
  if (replications == 0) throw ConfigError("at least one replication is required");

  std::vector<std::uint32_t> counts = defender_counts;
  std::sort(counts.begin(), counts.end());

  std::vector<ComparisonRecord> records;
  records.reserve(counts.size() * replications);
  for (std::uint32_t count : counts) {
    for (std::uint32_t r = 0; r < replications; ++r) {
      const std::uint64_t seed = sweep_instance_seed(base_seed, count, r);
      try {
        GenParams gen = params.base;
        gen.defender_count = count;
        const Scenario scenario = make_scenario(gen, seed);
        ComparisonRecord record =
            run_comparison(scenario.network, scenario.spec, params.epsilon);
        // Sweep artifacts are byte-reproducible; measured time would leak
        // nondeterminism into them. Per-instance timing stays with
        // run_comparison.
        record.wall_clock_ms = 0.0;
        records.push_back(std::move(record));
      } catch (const Error& e) {
        throw ConfigError("sweep instance failed (defenders=" +
                          std::to_string(count) + ", replication=" +
                          std::to_string(r) + ", seed=" + hex16(seed) +
                          "): " + e.what());
      }
    }
  }
  return records;
}

ReportFiles emit_report(const std::vector<ComparisonRecord>& records,
                        const std::filesystem::path& out_dir) {
  if (records.empty()) throw ConfigError("no records to report");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());

  ReportFiles files{out_dir / "report.csv", out_dir / "summary.json",
                    out_dir / "plot.csv"};

  {
    std::ofstream csv(files.csv);
    if (!csv) throw Error("cannot write " + files.csv.string());
    csv << "scenario_id,defender_count,dpero_survival,baseline_survival,"
           "dpero_time,baseline_time,dpero_cost,sweeps,wall_clock_ms,status\n";
    for (const ComparisonRecord& r : records) {
      csv << r.scenario_id << ',' << r.defender_count << ','
          << format_double(r.dpero_survival) << ','
          << format_double(r.baseline_survival) << ','
          << format_double(r.dpero_time) << ','
          << format_double(r.baseline_time) << ','
          << format_double(r.dpero_cost) << ',' << r.sweeps << ','
          << static_cast<long long>(r.wall_clock_ms) << ','
          << to_string(r.status) << '\n';
    }
    if (!csv) throw Error("failed while writing " + files.csv.string());
  }

  const auto stats = aggregate(records);
  {
    json summary;
    summary["instances"] = records.size();
    json per_count = json::array();
    for (const auto& [count, s] : stats) {
      per_count.push_back(
          {{"defender_count", count},
           {"instances", s.count},
           {"dpero_survival", {{"mean", s.dpero_mean}, {"stddev", s.dpero_stddev}}},
           {"baseline_survival",
            {{"mean", s.baseline_mean}, {"stddev", s.baseline_stddev}}}});
    }
    summary["per_defender_count"] = std::move(per_count);

    std::ofstream out(files.summary);
    if (!out) throw Error("cannot write " + files.summary.string());
    out << summary.dump(2) << '\n';
    if (!out) throw Error("failed while writing " + files.summary.string());
  }

  {
    std::ofstream plot(files.plot);
    if (!plot) throw Error("cannot write " + files.plot.string());
    plot << "defender_count,dpero_mean_survival,baseline_mean_survival\n";
    for (const auto& [count, s] : stats) {
      plot << count << ',' << format_double(s.dpero_mean) << ','
           << format_double(s.baseline_mean) << '\n';
    }
    if (!plot) throw Error("failed while writing " + files.plot.string());
  }

  return files;
}

}  // namespace dpero
