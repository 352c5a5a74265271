#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "uavrl/mdp.hpp"
#include "uavrl/rng.hpp"

namespace uavrl {

struct PathResult;  // metrics.hpp

enum class Algorithm { QLearning, Sarsa };

std::string_view algorithm_name(Algorithm a);
Algorithm algorithm_from_name(std::string_view name);  // throws ValidationError

/// Dense action-value table, state-major. Rows for the goal state stay at
/// zero throughout training (the trainer never writes them); value iteration
/// and the update rules rely on that convention for terminal bootstraps.
class QTable {
 public:
  QTable(int state_count, int action_count)
      : state_count_(state_count), action_count_(action_count),
        values_(static_cast<std::size_t>(state_count) * action_count, 0.0) {}

  int state_count() const { return state_count_; }
  int action_count() const { return action_count_; }

  double at(int state, int action) const { return values_[offset(state, action)]; }
  double& at(int state, int action) { return values_[offset(state, action)]; }

  std::span<const double> row(int state) const {
    return {values_.data() + offset(state, 0), static_cast<std::size_t>(action_count_)};
  }

  /// Lowest-index argmax: the deterministic tie-break used by evaluation
  /// rollouts and the oracle's greedy policy.
  int greedy_action(int state) const;

  std::span<const double> values() const { return values_; }

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  std::size_t offset(int state, int action) const {
    return static_cast<std::size_t>(state) * action_count_ + action;
  }

  int state_count_;
  int action_count_;
  std::vector<double> values_;
};

struct Hyperparams {
  double alpha = 0.1;            // learning rate, (0, 1]
  double gamma = 0.95;           // discount factor, [0, 1)
  double epsilon = 0.3;          // initial exploration rate, [0, 1]
  double epsilon_decay = 0.999;  // multiplicative per-episode factor, (0, 1]
  double epsilon_min = 0.01;     // exploration floor, [0, epsilon]
  int episodes = 5000;
  int max_steps_per_episode = 0;  // must be positive; see default_hyperparams
  std::uint64_t seed = 1;

  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

/// Documented defaults, with the episode step cap sized to the grid:
/// 4 * (width + height) cells.
Hyperparams default_hyperparams(const Scenario& s);

int default_step_cap(const Scenario& s);

/// Throws ValidationError naming the offending field.
void validate(const Hyperparams& h);

struct EpisodeRecord {
  int episode = 0;
  double cumulative_reward = 0.0;  // undiscounted sum of the episode's rewards
  int steps = 0;
  double epsilon = 0.0;  // exploration rate in force during this episode
  bool reached_goal = false;
};

struct TrainingTrace {
  Algorithm algorithm = Algorithm::QLearning;
  std::uint64_t seed = 0;
  std::vector<EpisodeRecord> episodes;
};

/// Epsilon-greedy selection. One unit draw decides explore vs exploit; an
/// exploring step draws uniformly over all k actions (the greedy one
/// included). A greedy step breaks argmax ties uniformly at random, consuming
/// a draw only when the argmax is not unique. The draw order is part of the
/// reproducibility contract.
int select_action(const QTable& q, const ActionSpace& space, int state_index,
                  double epsilon, Pcg32& rng);

/// Off-policy one-step update toward reward + gamma * max_a' Q(next, a'),
/// with a zero bootstrap at terminal states. Changes exactly the (state,
/// action) entry; returns its new value.
double q_learning_update(QTable& q, const Scenario& scenario, const ActionSpace& space,
                         const Transition& t, const Hyperparams& h);

/// On-policy one-step update toward reward + gamma * Q(next, next_action),
/// where next_action is the action actually selected at the next state
/// (pass -1 only for terminal transitions, where the bootstrap is zero).
double sarsa_update(QTable& q, const Scenario& scenario, const ActionSpace& space,
                    const Transition& t, int next_action_index, const Hyperparams& h);

/// Fired after every table update during training.
struct StepEvent {
  int episode = 0;
  int step = 0;  // step index within the episode
  const Transition& transition;
  int action_index = -1;       // index of the executed action
  int next_action_index = -1;  // SARSA's bootstrap action; -1 otherwise
  double updated_value = 0.0;
  const QTable& q;
};
using StepHook = std::function<void(const StepEvent&)>;

struct TrainResult {
  QTable q;
  TrainingTrace trace;
};

/// Runs h.episodes episodes from scenario.start. Each episode loops
/// select -> apply -> update until the goal or the step cap; epsilon decays
/// multiplicatively per episode down to epsilon_min. Fully reproducible from
/// h.seed. A single run is sequential; concurrent runs are safe as long as
/// each owns its QTable and RNG.
TrainResult train(const Scenario& scenario, const CoverageGrid& coverage,
                  Algorithm algorithm, const ActionSpace& space, const Hyperparams& h,
                  const StepHook& hook = {});

/// Executes lowest-index argmax actions from the start until the goal or
/// step_cap. Failure to reach the goal is reported in the result, not an
/// error.
PathResult greedy_rollout(const Scenario& scenario, const CoverageGrid& coverage,
                          const QTable& q, const ActionSpace& space, int step_cap);

/// Table dump with provenance header. Loading rejects shape mismatches.
struct QTableDump {
  QTable q;
  int width_cells = 0;
  int height_cells = 0;
  int action_count = 0;
  Algorithm algorithm = Algorithm::QLearning;
  Hyperparams hyperparams;
};

std::string save_qtable(const QTableDump& dump);
QTableDump load_qtable(std::istream& in);
QTableDump load_qtable_file(const std::string& path);
void save_qtable_file(const QTableDump& dump, const std::string& path);

/// Throws ValidationError naming both shapes when the dump does not match
/// the scenario grid or the action-space size.
void check_shape(const QTableDump& dump, const Scenario& scenario, const ActionSpace& space);

}  // namespace uavrl
