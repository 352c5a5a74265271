#pragma once

#include <string_view>

#include "uavrl/scenario.hpp"

namespace uavrl {

/// The UAV's position in the grid.
struct State {
  CellCoord cell;

  friend bool operator==(const State&, const State&) = default;
};

/// Compass moves, clockwise from north. y grows southward, so North is y-1.
enum class Action : int {
  North = 0,
  NorthEast,
  East,
  SouthEast,
  South,
  SouthWest,
  West,
  NorthWest,
};

CellCoord action_offset(Action a);
std::string_view action_name(Action a);
bool is_diagonal(Action a);

/// The action set in play: all 8 compass moves, or the 4 axial ones
/// (N, E, S, W) when diagonals are disabled. Value-table columns are indices
/// into this set; the index order fixes evaluation tie-breaking, so it is
/// part of the reproducibility contract.
class ActionSpace {
 public:
  static ActionSpace compass8() { return ActionSpace(8); }
  static ActionSpace axial4() { return ActionSpace(4); }
  /// Accepts 4 or 8; anything else is a ValidationError.
  static ActionSpace from_count(int count);

  int count() const { return count_; }
  Action at(int index) const;
  int index_of(Action a) const;  // throws ValidationError if a is not in the set

 private:
  explicit ActionSpace(int count) : count_(count) {}
  int count_;
};

/// Reward values, in precedence order: reaching the destination dominates,
/// then the invalid-move penalty, then the reliable-zone discount, then the
/// plain step penalty. Exactly one applies per transition.
inline constexpr double kRewardGoal = 10.0;
inline constexpr double kRewardInvalid = -10.0;
inline constexpr double kRewardReliableStep = -0.3;
inline constexpr double kRewardValidStep = -1.0;

struct Transition {
  State state;
  Action action = Action::North;
  State next_state;
  double reward = 0.0;
  bool terminal = false;
};

/// Reward for arriving at `to` from `from`, where `valid` says whether the
/// attempted move stayed inside the grid. Returns exactly one of
/// {+10, -10, -0.3, -1} by the precedence above.
double reward_of(const Scenario& scenario, const CoverageGrid& coverage,
                 State from, State to, bool valid);

/// Deterministic single-step transition. Moves one cell in the action's
/// direction when that cell is inside the grid; an off-grid move is absorbed
/// (the UAV stays put) and penalized rather than being an error. terminal is
/// true iff the next state is the goal.
Transition apply_action(const Scenario& scenario, const CoverageGrid& coverage,
                        State state, Action action);

/// Row-major bijection onto [0, width*height): index = y * width + x.
/// Out-of-bounds states are a contract violation (ValidationError).
int state_index(const Scenario& scenario, State state);

/// Euclidean displacement between identical or neighboring cells: 0 for the
/// same cell, cell_size_m for axial neighbors, cell_size_m * sqrt(2) for
/// diagonal neighbors. Non-adjacent pairs are a contract violation.
double step_distance_m(const Scenario& scenario, State from, State to);

}  // namespace uavrl
