#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavrl/learner.hpp"

namespace uavrl {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;  // bad flags, bad inputs, parse errors
inline constexpr int kExitCheckFailed = 3; // oracle --check mismatch
inline constexpr int kExitIo = 4;          // filesystem failures

/// Hyperparameter flags shared by train and compare. max_steps_per_episode
/// of 0 means "derive from the grid" (4 * (width + height)).
struct HyperparamArgs {
  double alpha = 0.1;
  double gamma = 0.95;
  double epsilon = 0.3;
  double epsilon_decay = 0.999;
  double epsilon_min = 0.01;
  int episodes = 5000;
  int max_steps = 0;
};

Hyperparams resolve_hyperparams(const HyperparamArgs& args, const Scenario& scenario,
                                std::uint64_t seed);

struct GenScenarioArgs {
  double width_km = 10.0;
  double height_km = 4.0;
  double cell_m = 250.0;
  std::string bs_layout = "chain";  // chain | random
  int bs_count = 10;
  std::uint64_t seed = 1;
  double altitude_m = 60.0;
  double coverage_radius_m = 500.0;
  double coverage_ceiling_m = 85.0;
  std::string out_dir = ".";
  std::string name = "scenario.json";
  std::vector<std::string> command_line;
};

struct TrainArgs {
  std::string scenario_path;
  std::string algo = "qlearning";
  int actions = 8;
  HyperparamArgs hyper;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::vector<std::string> command_line;
};

struct RolloutArgs {
  std::string scenario_path;
  std::string qtable_path;
  int step_cap = 0;  // 0: derive from the grid
  bool analytic_circles = false;
  std::string out_dir = ".";
  std::vector<std::string> command_line;
};

struct CompareArgs {
  std::string scenario_path;
  int actions = 8;
  HyperparamArgs hyper;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  int window = 100;
  bool analytic_circles = false;
  std::string out_dir = ".";
  std::vector<std::string> command_line;
};

struct OracleArgs {
  std::string scenario_path;
  int actions = 8;
  double gamma = 0.95;
  bool gamma_explicit = false;  // true when --gamma was passed on the command line
  double tolerance = 1e-10;
  int max_states = 10000;
  std::string check_qtable_path;  // empty: no check
  std::string out_dir = ".";
  std::vector<std::string> command_line;
};

// Each command validates its inputs before writing anything, then writes its
// artifacts plus a run_manifest.json into out_dir. Errors are thrown
// (ValidationError / ParseError / IoError); the return value is kExitOk
// except for cmd_oracle, which returns kExitCheckFailed when --check finds a
// mismatch beyond the agreement tolerance.

int cmd_gen_scenario(const GenScenarioArgs& args);
int cmd_train(const TrainArgs& args);
int cmd_rollout(const RolloutArgs& args);
int cmd_compare(const CompareArgs& args);
int cmd_oracle(const OracleArgs& args);

/// Tolerance for oracle --check: |rollout return - V*(start)|.
inline constexpr double kCheckTolerance = 1e-9;

}  // namespace uavrl
