#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "uavrl/errors.hpp"
#include "uavrl/rng.hpp"
#include "uavrl/scenario.hpp"

namespace uavrl {
namespace {

Scenario basic(int w = 8, int h = 8) {
  Scenario s;
  s.width_cells = w;
  s.height_cells = h;
  s.start = {0, 0};
  s.goal = {w - 1, h - 1};
  return s;
}

Scenario random_scenario(Pcg32& rng) {
  Scenario s = basic(2 + static_cast<int>(rng.next_below(14)),
                     2 + static_cast<int>(rng.next_below(14)));
  const int stations = static_cast<int>(rng.next_below(5));
  for (int i = 0; i < stations; ++i) {
    s.base_stations.push_back(
        {{static_cast<int>(rng.next_below(static_cast<std::uint32_t>(s.width_cells))),
          static_cast<int>(rng.next_below(static_cast<std::uint32_t>(s.height_cells)))}});
  }
  s.coverage_radius_m = 100.0 * rng.next_below(12);
  return s;
}

// Independent brute force: Euclidean center distance via hypot, closed disk.
CoverageGrid brute_force_coverage(const Scenario& s) {
  CoverageGrid g(s.width_cells, s.height_cells);
  if (s.altitude_m > s.coverage_ceiling_m) return g;
  for (int y = 0; y < s.height_cells; ++y) {
    for (int x = 0; x < s.width_cells; ++x) {
      for (const BaseStation& bs : s.base_stations) {
        const double dist = std::hypot(static_cast<double>(x - bs.cell.x),
                                       static_cast<double>(y - bs.cell.y)) *
                            s.cell_size_m;
        if (dist <= s.coverage_radius_m) {
          g.set({x, y}, true);
          break;
        }
      }
    }
  }
  return g;
}

TEST(ScenarioValidate, AcceptsBasic) {
  EXPECT_NO_THROW(validate(basic()));
}

TEST(ScenarioValidate, RejectsTinyGrid) {
  Scenario s = basic();
  s.width_cells = 1;
  EXPECT_THROW(validate(s), ValidationError);
  s = basic();
  s.height_cells = 0;
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(ScenarioValidate, RejectsNonPositiveCellSize) {
  Scenario s = basic();
  s.cell_size_m = 0.0;
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(ScenarioValidate, RejectsStartEqualGoal) {
  Scenario s = basic();
  s.goal = s.start;
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(ScenarioValidate, RejectsOutOfBoundsEndpointsAndStations) {
  Scenario s = basic();
  s.goal = {8, 7};
  EXPECT_THROW(validate(s), ValidationError);
  s = basic();
  s.start = {-1, 0};
  EXPECT_THROW(validate(s), ValidationError);
  s = basic();
  s.base_stations.push_back({{3, 9}});
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(ScenarioValidate, RejectsNegativeCoverageGeometry) {
  Scenario s = basic();
  s.coverage_radius_m = -1.0;
  EXPECT_THROW(validate(s), ValidationError);
  s = basic();
  s.coverage_ceiling_m = -0.5;
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(Coverage, EmptyStationsAllFalse) {
  const Scenario s = basic();
  const CoverageGrid g = build_coverage(s);
  EXPECT_EQ(g.reliable_count(), 0);
}

TEST(Coverage, SingleStationThirteenCells) {
  Scenario s = basic(12, 12);
  s.base_stations.push_back({{5, 5}});
  const CoverageGrid g = build_coverage(s);
  const std::set<std::pair<int, int>> expected = {
      {5, 5}, {4, 5}, {6, 5}, {5, 4}, {5, 6}, {4, 4}, {4, 6},
      {6, 4}, {6, 6}, {3, 5}, {7, 5}, {5, 3}, {5, 7}};
  EXPECT_EQ(g.reliable_count(), 13);
  for (int y = 0; y < 12; ++y) {
    for (int x = 0; x < 12; ++x) {
      EXPECT_EQ(g.reliable({x, y}), expected.count({x, y}) == 1)
          << "cell (" << x << "," << y << ")";
    }
  }
}

TEST(Coverage, ExactRadiusBoundaryIsIncluded) {
  Scenario s = basic(12, 12);
  s.base_stations.push_back({{5, 5}});
  const CoverageGrid g = build_coverage(s);
  // Distance exactly 2 cells = 500 m = the radius: closed disk keeps them.
  EXPECT_TRUE(g.reliable({3, 5}));
  EXPECT_TRUE(g.reliable({7, 5}));
  EXPECT_TRUE(g.reliable({5, 3}));
  EXPECT_TRUE(g.reliable({5, 7}));
  EXPECT_FALSE(g.reliable({3, 4}));  // sqrt(5) cells > 2
}

TEST(Coverage, CeilingGateZeroesEverything) {
  Scenario s = basic(12, 12);
  s.base_stations.push_back({{5, 5}});
  s.altitude_m = 90.0;
  EXPECT_EQ(build_coverage(s).reliable_count(), 0);
  s.altitude_m = 85.0;  // at the ceiling is still reliable
  EXPECT_GT(build_coverage(s).reliable_count(), 0);
}

TEST(Coverage, MatchesBruteForceOnRandomScenarios) {
  Pcg32 rng(2024);
  for (int i = 0; i < 50; ++i) {
    const Scenario s = random_scenario(rng);
    const CoverageGrid fast = build_coverage(s);
    const CoverageGrid serial = build_coverage_serial(s);
    const CoverageGrid brute = brute_force_coverage(s);
    EXPECT_TRUE(fast == serial) << "case " << i;
    EXPECT_TRUE(fast == brute) << "case " << i;
  }
}

TEST(Coverage, AddingStationIsMonotone) {
  Pcg32 rng(31337);
  for (int i = 0; i < 20; ++i) {
    Scenario s = random_scenario(rng);
    const CoverageGrid before = build_coverage(s);
    s.base_stations.push_back(
        {{static_cast<int>(rng.next_below(static_cast<std::uint32_t>(s.width_cells))),
          static_cast<int>(rng.next_below(static_cast<std::uint32_t>(s.height_cells)))}});
    const CoverageGrid after = build_coverage(s);
    for (int y = 0; y < s.height_cells; ++y) {
      for (int x = 0; x < s.width_cells; ++x) {
        if (before.reliable({x, y})) {
          ASSERT_TRUE(after.reliable({x, y})) << "case " << i;
        }
      }
    }
  }
}

TEST(Coverage, HorizontalReflectionReflectsMask) {
  Scenario s = basic(9, 7);
  s.base_stations.push_back({{2, 3}});
  s.base_stations.push_back({{6, 1}});
  Scenario mirrored = s;
  for (BaseStation& bs : mirrored.base_stations) {
    bs.cell.x = s.width_cells - 1 - bs.cell.x;
  }
  const CoverageGrid g = build_coverage(s);
  const CoverageGrid m = build_coverage(mirrored);
  for (int y = 0; y < s.height_cells; ++y) {
    for (int x = 0; x < s.width_cells; ++x) {
      EXPECT_EQ(g.reliable({x, y}), m.reliable({s.width_cells - 1 - x, y}));
    }
  }
}

TEST(Coverage, DuplicateStationsChangeNothing) {
  Scenario s = basic(10, 10);
  s.base_stations.push_back({{4, 4}});
  const CoverageGrid one = build_coverage(s);
  s.base_stations.push_back({{4, 4}});
  s.base_stations.push_back({{4, 4}});
  EXPECT_TRUE(build_coverage(s) == one);
}

TEST(ScenarioIo, RoundTripsExactly) {
  Pcg32 rng(404);
  for (int i = 0; i < 10; ++i) {
    Scenario s = random_scenario(rng);
    s.altitude_m = 61.5;
    const std::string bytes = save_scenario(s);
    std::istringstream in(bytes);
    const Scenario loaded = load_scenario(in);
    EXPECT_TRUE(loaded == s) << "case " << i;
    EXPECT_EQ(save_scenario(loaded), bytes) << "case " << i;
  }
}

TEST(ScenarioIo, SaveIsDeterministic) {
  const Scenario s = basic();
  EXPECT_EQ(save_scenario(s), save_scenario(s));
}

TEST(ScenarioIo, RoundTripPreservesCoverage) {
  Scenario s = basic(10, 6);
  s.base_stations.push_back({{3, 3}});
  std::istringstream in(save_scenario(s));
  EXPECT_TRUE(build_coverage(load_scenario(in)) == build_coverage(s));
}

TEST(ScenarioIo, LoadsCanonicalFortyBySixteen) {
  const Scenario s = load_scenario_file(std::string(UAVRL_SCENARIO_DIR) +
                                        "/canonical_40x16.json");
  EXPECT_EQ(s.width_cells, 40);
  EXPECT_EQ(s.height_cells, 16);
  EXPECT_EQ(s.cell_size_m, 250.0);
  EXPECT_EQ(s.start, (CellCoord{0, 8}));
  EXPECT_EQ(s.goal, (CellCoord{39, 8}));
  EXPECT_EQ(s.base_stations.size(), 10u);
}

TEST(ScenarioIo, RejectsUnknownKeys) {
  std::istringstream in(R"({"width_cells":4,"height_cells":4,"cell_size_m":250.0,
    "altitude_m":60.0,"coverage_radius_m":500.0,"coverage_ceiling_m":85.0,
    "start":{"x":0,"y":0},"goal":{"x":3,"y":3},"base_stations":[],"bogus":1})");
  EXPECT_THROW(load_scenario(in), ParseError);
}

TEST(ScenarioIo, RejectsGoalOutsideGrid) {
  std::istringstream in(R"({"width_cells":4,"height_cells":4,"cell_size_m":250.0,
    "altitude_m":60.0,"coverage_radius_m":500.0,"coverage_ceiling_m":85.0,
    "start":{"x":0,"y":0},"goal":{"x":9,"y":0},"base_stations":[]})");
  EXPECT_THROW(load_scenario(in), ValidationError);
}

TEST(ScenarioIo, RejectsMalformedJson) {
  std::istringstream in("{not json");
  EXPECT_THROW(load_scenario(in), ParseError);
}

TEST(ScenarioIo, MissingFileIsIoError) {
  EXPECT_THROW(load_scenario_file("/nonexistent/nope.json"), IoError);
}

TEST(ScenarioHash, StableFormatAndEquality) {
  const Scenario a = basic();
  const std::string h = scenario_hash(a);
  ASSERT_EQ(h.size(), 8u + 16u);
  EXPECT_EQ(h.substr(0, 8), "fnv1a64:");
  EXPECT_EQ(scenario_hash(a), h);
  Scenario b = basic();
  b.altitude_m = 70.0;
  EXPECT_NE(scenario_hash(b), h);
}

}  // namespace
}  // namespace uavrl
