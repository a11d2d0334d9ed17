#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "dpero/errors.hpp"
#include "dpero/generator.hpp"
#include "dpero/solver.hpp"

using namespace dpero;

TEST_CASE("lattice arc counts") {
  const RiskNetwork tiny = generate_gre(2, 2, 0, 1);
  CHECK(tiny.node_count() == 4);
  CHECK(tiny.edge_count() == 8);

  const RiskNetwork grid = generate_gre(15, 15, 0, 1);
  CHECK(grid.node_count() == 225);
  CHECK(grid.edge_count() == 840);  // 2 * (15*14 + 15*14)
  for (double p : grid.capture_probs()) CHECK(p == 0.0);
}

TEST_CASE("grids below 2x2 are rejected") {
  CHECK_THROWS_AS(generate_gre(1, 5, 0, 1), ConfigError);
  CHECK_THROWS_AS(generate_gre(5, 1, 0, 1), ConfigError);
}

TEST_CASE("same seed, same network") {
  const RiskNetwork a = generate_gre(6, 7, 9, 77);
  const RiskNetwork b = generate_gre(6, 7, 9, 77);
  CHECK(a.edge_list() == b.edge_list());
  CHECK(a.capture_probs() == b.capture_probs());

  const RiskNetwork c = generate_gre(6, 7, 9, 78);
  CHECK(a.edge_list() != c.edge_list());
}

TEST_CASE("extra arcs avoid existing adjacencies and self-loops") {
  const RiskNetwork grid = generate_gre(4, 4, 0, 5);
  const RiskNetwork augmented = generate_gre(4, 4, 12, 5);
  CHECK(augmented.edge_count() == grid.edge_count() + 12);

  std::set<std::pair<NodeId, NodeId>> lattice;
  for (const EdgeDef& e : grid.edge_list()) lattice.insert({e.source, e.target});
  std::set<std::pair<NodeId, NodeId>> all;
  for (const EdgeDef& e : augmented.edge_list()) {
    CHECK(e.source != e.target);
    CHECK(all.insert({e.source, e.target}).second);  // no duplicates
  }
}

TEST_CASE("extra arcs beyond capacity are rejected") {
  // 2x2 lattice uses 8 of the 12 possible arcs
  CHECK_THROWS_AS(generate_gre(2, 2, 5, 1), ConfigError);
  CHECK(generate_gre(2, 2, 4, 1).edge_count() == 12);
}

TEST_CASE("defender placement") {
  const RiskNetwork grid = generate_gre(15, 15, 0, 3);
  const std::vector<NodeId> forbidden{0, 210, 213, 217, 220, 224};

  SUBCASE("count zero changes nothing") {
    const RiskNetwork same = place_defenders(grid, 0, 0.2, 0.5, forbidden, 3);
    CHECK(same.capture_probs() == grid.capture_probs());
  }

  SUBCASE("exact count within bounds") {
    const RiskNetwork placed = place_defenders(grid, 5, 0.2, 0.5, forbidden, 3);
    std::size_t defended = 0;
    std::size_t untouched = 0;
    for (NodeId v = 0; v < placed.node_count(); ++v) {
      const double p = placed.capture_prob(v);
      if (p == 0.0) {
        ++untouched;
        continue;
      }
      ++defended;
      CHECK(p >= 0.2);
      CHECK(p <= 0.5);
      CHECK(std::find(forbidden.begin(), forbidden.end(), v) == forbidden.end());
    }
    CHECK(defended == 5);
    CHECK(untouched == 220);
  }

  SUBCASE("degenerate interval pins the probability") {
    const RiskNetwork placed = place_defenders(grid, 7, 0.3, 0.3, forbidden, 3);
    for (double p : placed.capture_probs()) {
      CHECK((p == 0.0 || p == 0.3));
    }
  }

  SUBCASE("per-seed determinism and count-prefix stability") {
    const RiskNetwork a = place_defenders(grid, 10, 0.2, 0.5, forbidden, 9);
    const RiskNetwork b = place_defenders(grid, 10, 0.2, 0.5, forbidden, 9);
    CHECK(a.capture_probs() == b.capture_probs());

    // The first placements do not move when more defenders are requested.
    const RiskNetwork more = place_defenders(grid, 20, 0.2, 0.5, forbidden, 9);
    for (NodeId v = 0; v < a.node_count(); ++v) {
      if (a.capture_prob(v) > 0.0) CHECK(more.capture_prob(v) > 0.0);
    }
  }

  SUBCASE("rejects impossible requests") {
    CHECK_THROWS_AS(place_defenders(grid, 220, 0.2, 0.5, forbidden, 3),
                    ConfigError);
    CHECK_THROWS_AS(place_defenders(grid, 5, 0.2, 1.0, forbidden, 3),
                    DomainError);
    CHECK_THROWS_AS(place_defenders(grid, 5, 0.6, 0.5, forbidden, 3),
                    DomainError);
    CHECK_THROWS_AS(place_defenders(grid, 5, -0.1, 0.5, forbidden, 3),
                    DomainError);
  }
}

TEST_CASE("scenario layout follows the grid convention") {
  GenParams params;
  params.rows = 15;
  params.cols = 15;
  params.defender_count = 5;
  const Scenario scenario = make_scenario(params, 11);
  CHECK(scenario.spec.start == NodeId{0});
  CHECK(scenario.spec.exits ==
        std::vector<NodeId>{210, 213, 217, 220, 224});
  CHECK(scenario.spec.gen == params);

  // defenders never sit on the start or an exit
  CHECK(scenario.network.capture_prob(0) == 0.0);
  for (NodeId d : scenario.spec.exits) {
    CHECK(scenario.network.capture_prob(d) == 0.0);
  }

  GenParams narrow;
  narrow.rows = 2;
  narrow.cols = 5;
  narrow.defender_count = 0;
  const Scenario small = make_scenario(narrow, 11);
  CHECK(small.spec.exits == std::vector<NodeId>{5, 6, 7, 8, 9});
}

TEST_CASE("the heaviest default defender load fits") {
  GenParams params;
  params.defender_count = 25;
  const Scenario scenario = make_scenario(params, 5);
  std::size_t defended = 0;
  for (double p : scenario.network.capture_probs()) {
    if (p > 0.0) ++defended;
  }
  CHECK(defended == 25);
}

TEST_CASE("exit layout corner cases") {
  CHECK(grid_exits(4, 6, 1) == std::vector<NodeId>{23});
  CHECK_THROWS_AS(grid_exits(4, 4, 5), ConfigError);
  CHECK_THROWS_AS(grid_exits(4, 4, 0), ConfigError);
}

TEST_CASE("pure grids keep every node connected to the exits") {
  GenParams params;
  params.rows = 7;
  params.cols = 9;
  params.defender_count = 10;
  const Scenario scenario = make_scenario(params, 21);
  const ValueTable table =
      value_iteration(scenario.network, scenario.spec.exits);
  for (double cost : table.cost_to_go) {
    CHECK(std::isfinite(cost));
  }
}

TEST_CASE("identical parameters produce identical scenario bytes") {
  GenParams params;
  params.defender_count = 12;
  params.extra_edges = 6;
  std::ostringstream a;
  std::ostringstream b;
  save_scenario(make_scenario(params, 99), a);
  save_scenario(make_scenario(params, 99), b);
  CHECK(a.str() == b.str());

  // The topology stream is independent of the defender stream.
  GenParams heavier = params;
  heavier.defender_count = 25;
  CHECK(make_scenario(params, 99).network.edge_list() ==
        make_scenario(heavier, 99).network.edge_list());
}
