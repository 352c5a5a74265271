#include <gtest/gtest.h>

#include <cmath>

#include "uavrl/errors.hpp"
#include "uavrl/mdp.hpp"

namespace uavrl {
namespace {

Scenario arena() {
  Scenario s;
  s.width_cells = 8;
  s.height_cells = 8;
  s.start = {0, 0};
  s.goal = {7, 7};
  s.base_stations.push_back({{4, 4}});
  return s;
}

TEST(Actions, OffsetsAreClockwiseFromNorth) {
  EXPECT_EQ(action_offset(Action::North), (CellCoord{0, -1}));
  EXPECT_EQ(action_offset(Action::NorthEast), (CellCoord{1, -1}));
  EXPECT_EQ(action_offset(Action::East), (CellCoord{1, 0}));
  EXPECT_EQ(action_offset(Action::SouthEast), (CellCoord{1, 1}));
  EXPECT_EQ(action_offset(Action::South), (CellCoord{0, 1}));
  EXPECT_EQ(action_offset(Action::SouthWest), (CellCoord{-1, 1}));
  EXPECT_EQ(action_offset(Action::West), (CellCoord{-1, 0}));
  EXPECT_EQ(action_offset(Action::NorthWest), (CellCoord{-1, -1}));
}

TEST(Actions, DiagonalFlag) {
  EXPECT_FALSE(is_diagonal(Action::North));
  EXPECT_TRUE(is_diagonal(Action::NorthEast));
  EXPECT_FALSE(is_diagonal(Action::West));
  EXPECT_TRUE(is_diagonal(Action::SouthWest));
}

TEST(ActionSpaceSuite, FullAndAxialSets) {
  const ActionSpace full = ActionSpace::compass8();
  EXPECT_EQ(full.count(), 8);
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(full.at(i), static_cast<Action>(i));
    EXPECT_EQ(full.index_of(static_cast<Action>(i)), i);
  }
  const ActionSpace axial = ActionSpace::axial4();
  EXPECT_EQ(axial.count(), 4);
  EXPECT_EQ(axial.at(0), Action::North);
  EXPECT_EQ(axial.at(1), Action::East);
  EXPECT_EQ(axial.at(2), Action::South);
  EXPECT_EQ(axial.at(3), Action::West);
  EXPECT_EQ(axial.index_of(Action::West), 3);
  EXPECT_THROW(axial.index_of(Action::NorthEast), ValidationError);
}

TEST(ActionSpaceSuite, RejectsOtherSizes) {
  EXPECT_THROW(ActionSpace::from_count(5), ValidationError);
  EXPECT_THROW(ActionSpace::from_count(0), ValidationError);
  EXPECT_EQ(ActionSpace::from_count(4).count(), 4);
  EXPECT_EQ(ActionSpace::from_count(8).count(), 8);
}

TEST(ApplyAction, ReachingGoalPaysTenAndTerminates) {
  const Scenario s = arena();
  const CoverageGrid g = build_coverage(s);
  const Transition t = apply_action(s, g, State{{6, 7}}, Action::East);
  EXPECT_EQ(t.next_state.cell, (CellCoord{7, 7}));
  EXPECT_TRUE(t.terminal);
  EXPECT_EQ(t.reward, 10.0);
}

TEST(ApplyAction, OffGridMoveIsAbsorbedWithPenalty) {
  const Scenario s = arena();
  const CoverageGrid g = build_coverage(s);
  const Transition t = apply_action(s, g, State{{0, 0}}, Action::West);
  EXPECT_EQ(t.next_state.cell, (CellCoord{0, 0}));
  EXPECT_EQ(t.reward, -10.0);
  EXPECT_FALSE(t.terminal);
}

TEST(ApplyAction, ReliableArrivalCostsLess) {
  const Scenario s = arena();
  const CoverageGrid g = build_coverage(s);
  ASSERT_TRUE(g.reliable({4, 4}));
  const Transition t = apply_action(s, g, State{{3, 4}}, Action::East);
  EXPECT_EQ(t.reward, -0.3);
  EXPECT_FALSE(t.terminal);
}

TEST(ApplyAction, PlainValidMoveCostsOne) {
  const Scenario s = arena();
  const CoverageGrid g = build_coverage(s);
  ASSERT_FALSE(g.reliable({1, 0}));
  const Transition t = apply_action(s, g, State{{0, 0}}, Action::East);
  EXPECT_EQ(t.reward, -1.0);
}

TEST(RewardOf, GoalBeatsReliability) {
  const Scenario s = arena();
  CoverageGrid g = build_coverage(s);
  const double before = reward_of(s, g, State{{6, 7}}, State{{7, 7}}, true);
  g.set({7, 7}, !g.reliable({7, 7}));
  const double after = reward_of(s, g, State{{6, 7}}, State{{7, 7}}, true);
  EXPECT_EQ(before, 10.0);
  EXPECT_EQ(after, 10.0);
}

TEST(RewardOf, InvalidBeatsReliability) {
  Scenario s = arena();
  s.base_stations = {{{0, 0}}};
  const CoverageGrid g = build_coverage(s);
  ASSERT_TRUE(g.reliable({0, 0}));
  EXPECT_EQ(reward_of(s, g, State{{0, 0}}, State{{0, 0}}, false), -10.0);
}

TEST(RewardOf, CodomainIsExactlyTheFourValues) {
  const Scenario s = arena();
  const CoverageGrid g = build_coverage(s);
  const ActionSpace space = ActionSpace::compass8();
  for (int y = 0; y < s.height_cells; ++y) {
    for (int x = 0; x < s.width_cells; ++x) {
      if (CellCoord{x, y} == s.goal) continue;
      for (int a = 0; a < space.count(); ++a) {
        const Transition t = apply_action(s, g, State{{x, y}}, space.at(a));
        const bool known = t.reward == 10.0 || t.reward == -10.0 || t.reward == -1.0 ||
                           t.reward == -0.3;
        ASSERT_TRUE(known) << "reward " << t.reward;
        ASSERT_EQ(t.terminal, t.next_state.cell == s.goal);
      }
    }
  }
}

TEST(ApplyAction, BoundaryAbsorptionEverywhere) {
  const Scenario s = arena();
  const CoverageGrid g = build_coverage(s);
  const ActionSpace space = ActionSpace::compass8();
  for (int y = 0; y < s.height_cells; ++y) {
    for (int x = 0; x < s.width_cells; ++x) {
      if (CellCoord{x, y} == s.goal) continue;
      for (int a = 0; a < space.count(); ++a) {
        const CellCoord off = action_offset(space.at(a));
        const CellCoord target{x + off.x, y + off.y};
        if (s.in_bounds(target)) continue;
        const Transition t = apply_action(s, g, State{{x, y}}, space.at(a));
        ASSERT_EQ(t.next_state.cell, (CellCoord{x, y}));
        ASSERT_EQ(t.reward, -10.0);
        ASSERT_FALSE(t.terminal);
      }
    }
  }
}

TEST(ApplyAction, ArrivalOutranksAbsorptionAtGoal) {
  // An out-of-bounds move from the goal keeps the agent on the goal cell, and
  // landing on the goal always reads as arrival, never as an absorbed move.
  const Scenario s = arena();
  const CoverageGrid g = build_coverage(s);
  const Transition t = apply_action(s, g, State{s.goal}, Action::SouthEast);
  EXPECT_EQ(t.next_state.cell, s.goal);
  EXPECT_EQ(t.reward, 10.0);
  EXPECT_TRUE(t.terminal);
}

TEST(StateIndex, RowMajorBijection) {
  Scenario s = arena();
  s.width_cells = 40;
  s.height_cells = 16;
  EXPECT_EQ(state_index(s, State{{0, 0}}), 0);
  EXPECT_EQ(state_index(s, State{{5, 2}}), 85);
  EXPECT_EQ(state_index(s, State{{39, 15}}), 639);
  EXPECT_THROW(state_index(s, State{{40, 0}}), ValidationError);
  EXPECT_THROW(state_index(s, State{{0, -1}}), ValidationError);
}

TEST(StepDistance, AxialDiagonalAndAbsorbed) {
  const Scenario s = arena();
  EXPECT_DOUBLE_EQ(step_distance_m(s, State{{2, 2}}, State{{3, 2}}), 250.0);
  EXPECT_NEAR(step_distance_m(s, State{{2, 2}}, State{{3, 3}}), 250.0 * std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(step_distance_m(s, State{{2, 2}}, State{{2, 2}}), 0.0);
  EXPECT_THROW(step_distance_m(s, State{{2, 2}}, State{{4, 2}}), ValidationError);
}

}  // namespace
}  // namespace uavrl
