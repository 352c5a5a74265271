#include "uavrl/mdp.hpp"

#include <array>
#include <cmath>
#include <string>

#include "uavrl/errors.hpp"

namespace uavrl {

namespace {

constexpr std::array<CellCoord, 8> kOffsets = {{
    {0, -1},   // N
    {1, -1},   // NE
    {1, 0},    // E
    {1, 1},    // SE
    {0, 1},    // S
    {-1, 1},   // SW
    {-1, 0},   // W
    {-1, -1},  // NW
}};

constexpr std::array<std::string_view, 8> kNames = {"N", "NE", "E", "SE", "S", "SW", "W", "NW"};

}  // namespace

CellCoord action_offset(Action a) { return kOffsets[static_cast<int>(a)]; }

std::string_view action_name(Action a) { return kNames[static_cast<int>(a)]; }

bool is_diagonal(Action a) {
  const CellCoord o = action_offset(a);
  return o.x != 0 && o.y != 0;
}

ActionSpace ActionSpace::from_count(int count) {
  if (count == 4) return axial4();
  if (count == 8) return compass8();
  throw ValidationError("action count must be 4 or 8, got " + std::to_string(count));
}

Action ActionSpace::at(int index) const {
  if (index < 0 || index >= count_) {
    throw ValidationError("action index " + std::to_string(index) + " out of range [0, " +
                          std::to_string(count_) + ")");
  }
  // The 4-action set keeps the axial moves in compass order: N, E, S, W.
  return count_ == 8 ? static_cast<Action>(index) : static_cast<Action>(index * 2);
}

int ActionSpace::index_of(Action a) const {
  const int raw = static_cast<int>(a);
  if (count_ == 8) return raw;
  if (raw % 2 != 0) {
    throw ValidationError("diagonal action " + std::string(action_name(a)) +
                          " is not in the 4-action set");
  }
  return raw / 2;
}

double reward_of(const Scenario& scenario, const CoverageGrid& coverage, State from, State to,
                 bool valid) {
  if (!scenario.in_bounds(from.cell) || !scenario.in_bounds(to.cell)) {
    throw ValidationError("reward_of: state outside the grid");
  }
  // Precedence: destination > invalid > reliable zone > plain step.
  if (to.cell == scenario.goal) return kRewardGoal;
  if (!valid) return kRewardInvalid;
  if (coverage.reliable(to.cell)) return kRewardReliableStep;
  return kRewardValidStep;
}

Transition apply_action(const Scenario& scenario, const CoverageGrid& coverage, State state,
                        Action action) {
  if (!scenario.in_bounds(state.cell)) {
    throw ValidationError("apply_action: state outside the grid");
  }
  const CellCoord o = action_offset(action);
  const CellCoord target{state.cell.x + o.x, state.cell.y + o.y};
  const bool valid = scenario.in_bounds(target);
  const State next{valid ? target : state.cell};
  Transition t;
  t.state = state;
  t.action = action;
  t.next_state = next;
  t.reward = reward_of(scenario, coverage, state, next, valid);
  t.terminal = next.cell == scenario.goal;
  return t;
}

int state_index(const Scenario& scenario, State state) {
  if (!scenario.in_bounds(state.cell)) {
    throw ValidationError("state_index: cell (" + std::to_string(state.cell.x) + "," +
                          std::to_string(state.cell.y) + ") outside " +
                          std::to_string(scenario.width_cells) + "x" +
                          std::to_string(scenario.height_cells) + " grid");
  }
  return state.cell.y * scenario.width_cells + state.cell.x;
}

double step_distance_m(const Scenario& scenario, State from, State to) {
  const int dx = std::abs(to.cell.x - from.cell.x);
  const int dy = std::abs(to.cell.y - from.cell.y);
  if (dx > 1 || dy > 1) {
    throw ValidationError("step_distance_m: cells (" + std::to_string(from.cell.x) + "," +
                          std::to_string(from.cell.y) + ") and (" + std::to_string(to.cell.x) +
                          "," + std::to_string(to.cell.y) + ") are not adjacent");
  }
  if (dx == 0 && dy == 0) return 0.0;
  if (dx + dy == 1) return scenario.cell_size_m;
  return scenario.cell_size_m * std::sqrt(2.0);
}

}  // namespace uavrl
