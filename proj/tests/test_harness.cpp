#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "dpero/errors.hpp"
#include "dpero/generator.hpp"
#include "dpero/harness.hpp"
#include "dpero/oracles.hpp"
#include "test_helpers.hpp"

using namespace dpero;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("dpero_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ScenarioSpec plain_spec(NodeId start, std::vector<NodeId> exits) {
  ScenarioSpec spec;
  spec.start = start;
  spec.exits = std::move(exits);
  return spec;
}

bool same_outcome(const ComparisonRecord& a, const ComparisonRecord& b) {
  // Everything except the wall clock, which is measured.
  return a.scenario_id == b.scenario_id &&
         a.defender_count == b.defender_count &&
         a.dpero_survival == b.dpero_survival &&
         a.baseline_survival == b.baseline_survival &&
         a.dpero_time == b.dpero_time && a.baseline_time == b.baseline_time &&
         a.dpero_cost == b.dpero_cost && a.sweeps == b.sweeps &&
         a.status == b.status;
}

}  // namespace

TEST_CASE("a risk-free scenario satisfies both routers") {
  const RiskNetwork net(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {0.0, 0.0, 0.0});
  const ComparisonRecord record = run_comparison(net, plain_spec(0, {2}));
  CHECK(record.dpero_survival == 1.0);
  CHECK(record.baseline_survival == 1.0);
  CHECK(record.status == RouteStatus::kOk);
}

TEST_CASE("the diamond fixture separates the two objectives") {
  const ComparisonRecord record =
      run_comparison(testing::diamond_network(), plain_spec(0, {4}));
  CHECK(record.dpero_survival == 1.0);
  CHECK(std::abs(record.baseline_survival - 0.7) <= 1e-15);
  CHECK(record.baseline_time == 2.0);
  CHECK(record.dpero_time == 3.0);
  CHECK(record.dpero_cost == 0.0);
}

TEST_CASE("a fully defended cut bounds the survival") {
  // 3x3 grid whose middle row is defended at 0.3: every escape crosses it
  // at least once, so the best possible survival is 0.7.
  RiskNetwork grid = generate_gre(3, 3, 0, 1);
  grid = grid.with_capture_probs({0, 0, 0, 0.3, 0.3, 0.3, 0, 0, 0});
  const ComparisonRecord record =
      run_comparison(grid, plain_spec(0, {6, 7, 8}));
  CHECK(record.dpero_survival > 0.0);
  CHECK(record.dpero_survival < 1.0);
  CHECK(std::abs(record.dpero_survival - 0.7) <= 1e-12);

  const EscapePath best = enumerate_best_path(grid, 0, {6, 7, 8});
  CHECK(record.dpero_survival == best.survival_prob);
}

TEST_CASE("a scenario without routes is recorded, not thrown") {
  const RiskNetwork net(4, {{0, 1, 1.0}, {1, 0, 1.0}, {2, 3, 1.0}},
                        {0.0, 0.0, 0.0, 0.0});
  const ComparisonRecord record = run_comparison(net, plain_spec(0, {3}));
  CHECK(record.status == RouteStatus::kNoRoute);
  CHECK(record.dpero_survival == 0.0);
  CHECK(record.baseline_survival == 0.0);
  CHECK(std::isinf(record.dpero_cost));
}

TEST_CASE("record invariants hold across a small sweep") {
  SweepParams params;
  params.base.rows = 6;
  params.base.cols = 6;
  const auto records = sweep(params, {5, 10, 15, 20, 25}, 2, 404);
  REQUIRE(records.size() == 10);

  std::uint32_t last_count = 0;
  for (const ComparisonRecord& r : records) {
    CHECK(r.defender_count >= last_count);
    last_count = r.defender_count;
    CHECK(r.status == RouteStatus::kOk);
    CHECK(r.dpero_survival >= r.baseline_survival);
    CHECK(r.baseline_time <= r.dpero_time);
    CHECK(r.sweeps <= 37);  // |V| + 1
  }
}

TEST_CASE("sweeps are reproducible and seeds are stable") {
  SweepParams params;
  params.base.rows = 5;
  params.base.cols = 5;
  const auto once = sweep(params, {3}, 1, 17);
  const auto twice = sweep(params, {3}, 1, 17);
  REQUIRE(once.size() == 1);
  REQUIRE(twice.size() == 1);
  CHECK(same_outcome(once[0], twice[0]));
  CHECK(once[0].wall_clock_ms == 0.0);  // sweep records carry no timing

  // The instance can be regenerated in isolation from the derived seed.
  GenParams gen = params.base;
  gen.defender_count = 3;
  const Scenario scenario =
      make_scenario(gen, sweep_instance_seed(17, 3, 0));
  const ComparisonRecord direct = run_comparison(scenario.network, scenario.spec);
  CHECK(same_outcome(once[0], direct));
}

TEST_CASE("a failing instance aborts the sweep and names the seed") {
  SweepParams params;
  params.base.rows = 2;
  params.base.cols = 2;
  params.base.exit_count = 2;
  // 4 nodes, 2 exits + start leave one eligible node; 2 defenders cannot fit.
  try {
    sweep(params, {2}, 1, 5);
    FAIL("sweep should have thrown");
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("seed=") != std::string::npos);
    CHECK(what.find("defenders=2") != std::string::npos);
  }
}

TEST_CASE("mean survival trends down as defenders are added") {
  SweepParams params;
  params.base.rows = 8;
  params.base.cols = 8;
  const auto records = sweep(params, {5, 15, 25}, 100, 2024);

  double means[3] = {0, 0, 0};
  for (std::size_t i = 0; i < records.size(); ++i) {
    means[i / 100] += records[i].dpero_survival;
  }
  CHECK(means[0] >= means[1]);
  CHECK(means[1] >= means[2]);
}

TEST_CASE("report files") {
  SweepParams params;
  params.base.rows = 6;
  params.base.cols = 6;
  const auto records = sweep(params, {5, 10, 15, 20, 25}, 2, 404);

  SUBCASE("csv header and row count are fixed") {
    const fs::path dir = fresh_dir("csv");
    const ReportFiles files = emit_report(records, dir);
    const std::string csv = slurp(files.csv);
    CHECK(csv.starts_with(
        "scenario_id,defender_count,dpero_survival,baseline_survival,"
        "dpero_time,baseline_time,dpero_cost,sweeps,wall_clock_ms,status\n"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);  // header + 10 rows
  }

  SUBCASE("summary groups per defender count") {
    const fs::path dir = fresh_dir("summary");
    const ReportFiles files = emit_report(records, dir);
    const std::string summary = slurp(files.summary);
    for (const char* needle :
         {"\"defender_count\": 5", "\"defender_count\": 10",
          "\"defender_count\": 15", "\"defender_count\": 20",
          "\"defender_count\": 25"}) {
      CHECK(summary.find(needle) != std::string::npos);
    }
    const std::string plot = slurp(files.plot);
    CHECK(plot.starts_with(
        "defender_count,dpero_mean_survival,baseline_mean_survival\n"));
    CHECK(std::count(plot.begin(), plot.end(), '\n') == 6);
  }

  SUBCASE("identical records emit identical bytes") {
    const fs::path dir_a = fresh_dir("bytes_a");
    const fs::path dir_b = fresh_dir("bytes_b");
    const ReportFiles a = emit_report(records, dir_a);
    const ReportFiles b = emit_report(records, dir_b);
    CHECK(slurp(a.csv) == slurp(b.csv));
    CHECK(slurp(a.summary) == slurp(b.summary));
    CHECK(slurp(a.plot) == slurp(b.plot));
  }

  SUBCASE("single record report") {
    const fs::path dir = fresh_dir("single");
    const ReportFiles files = emit_report({records[0]}, dir);
    const std::string csv = slurp(files.csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  }

  SUBCASE("unwritable destinations fail loudly") {
    CHECK_THROWS_AS(emit_report({}, fresh_dir("empty")), ConfigError);
    const fs::path blocker = fresh_dir("blocked");
    std::ofstream(blocker).put('x');  // a file where the directory should go
    CHECK_THROWS_AS(emit_report(records, blocker), Error);
  }
}
