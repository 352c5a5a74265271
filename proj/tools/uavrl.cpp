#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavrl/cli.hpp"
#include "uavrl/errors.hpp"
#include "uavrl/version.hpp"

namespace {

void add_hyper_flags(CLI::App& cmd, uavrl::HyperparamArgs& h) {
  cmd.add_option("--alpha", h.alpha, "Learning rate, in (0, 1]")->capture_default_str();
  cmd.add_option("--gamma", h.gamma, "Discount factor, in [0, 1)")->capture_default_str();
  cmd.add_option("--epsilon", h.epsilon, "Initial exploration rate, in [0, 1]")
      ->capture_default_str();
  cmd.add_option("--epsilon-decay", h.epsilon_decay,
                 "Per-episode multiplicative epsilon decay, in (0, 1]")
      ->capture_default_str();
  cmd.add_option("--epsilon-min", h.epsilon_min, "Exploration floor, in [0, epsilon]")
      ->capture_default_str();
  cmd.add_option("--episodes", h.episodes, "Training episodes")->capture_default_str();
  cmd.add_option("--max-steps", h.max_steps,
                 "Step cap per episode; 0 derives 4 * (width + height) from the grid")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-world UAV path planning: tabular RL trainer, evaluator and "
               "value-iteration oracle"};
  app.set_version_flag("--version", std::string(uavrl::kToolName) + " " + uavrl::kToolVersion);
  app.require_subcommand(1);

  const std::vector<std::string> command_line(argv + 1, argv + argc);

  uavrl::GenScenarioArgs gen;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen-scenario", "Generate a scenario file with a base-station layout");
  gen_cmd->add_option("--width-km", gen.width_km, "Grid width in km")->capture_default_str();
  gen_cmd->add_option("--height-km", gen.height_km, "Grid height in km")->capture_default_str();
  gen_cmd->add_option("--cell-m", gen.cell_m, "Cell side length in m")->capture_default_str();
  gen_cmd->add_option("--bs-layout", gen.bs_layout, "Base-station layout")
      ->check(CLI::IsMember({"chain", "random"}))
      ->capture_default_str();
  gen_cmd->add_option("--bs-count", gen.bs_count, "Number of base stations")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random layout")->capture_default_str();
  gen_cmd->add_option("--altitude-m", gen.altitude_m, "Flight altitude in m")
      ->capture_default_str();
  gen_cmd->add_option("--radius-m", gen.coverage_radius_m, "Reliable-coverage radius in m")
      ->capture_default_str();
  gen_cmd->add_option("--ceiling-m", gen.coverage_ceiling_m, "Coverage altitude ceiling in m")
      ->capture_default_str();
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->capture_default_str();
  gen_cmd->add_option("--name", gen.name, "Scenario file name")->capture_default_str();

  uavrl::TrainArgs train;
  CLI::App* train_cmd =
      app.add_subcommand("train", "Train a policy and write the value table");
  train_cmd->add_option("--scenario", train.scenario_path, "Scenario file")->required();
  train_cmd->add_option("--algo", train.algo, "Algorithm")
      ->check(CLI::IsMember({"qlearning", "sarsa"}))
      ->capture_default_str();
  train_cmd->add_option("--actions", train.actions, "Action set size (4 or 8)")
      ->check(CLI::IsMember({4, 8}))
      ->capture_default_str();
  add_hyper_flags(*train_cmd, train.hyper);
  train_cmd->add_option("--seed", train.seed, "Training seed")->capture_default_str();
  train_cmd->add_option("--out-dir", train.out_dir, "Output directory")->capture_default_str();

  uavrl::RolloutArgs rollout;
  CLI::App* rollout_cmd = app.add_subcommand(
      "rollout", "Roll out a trained table greedily and report the path metrics");
  rollout_cmd->add_option("--scenario", rollout.scenario_path, "Scenario file")->required();
  rollout_cmd->add_option("--qtable", rollout.qtable_path, "Trained table file")->required();
  rollout_cmd->add_option("--step-cap", rollout.step_cap,
                          "Rollout step cap; 0 derives it from the grid")
      ->capture_default_str();
  rollout_cmd->add_flag("--analytic-circles", rollout.analytic_circles,
                        "Draw coverage circles in the SVG");
  rollout_cmd->add_option("--out-dir", rollout.out_dir, "Output directory")
      ->capture_default_str();

  uavrl::CompareArgs compare;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Train both algorithms across seeds and aggregate the results");
  compare_cmd->add_option("--scenario", compare.scenario_path, "Scenario file")->required();
  compare_cmd->add_option("--actions", compare.actions, "Action set size (4 or 8)")
      ->check(CLI::IsMember({4, 8}))
      ->capture_default_str();
  add_hyper_flags(*compare_cmd, compare.hyper);
  compare_cmd->add_option("--seeds", compare.seeds, "Training seeds")
      ->delimiter(',')
      ->capture_default_str();
  compare_cmd->add_option("--window", compare.window,
                          "Episode window for the final reward average")
      ->capture_default_str();
  compare_cmd->add_flag("--analytic-circles", compare.analytic_circles,
                        "Draw coverage circles in the SVG");
  compare_cmd->add_option("--out-dir", compare.out_dir, "Output directory")
      ->capture_default_str();

  uavrl::OracleArgs oracle;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Compute optimal state values by value iteration");
  oracle_cmd->add_option("--scenario", oracle.scenario_path, "Scenario file")->required();
  oracle_cmd->add_option("--actions", oracle.actions, "Action set size (4 or 8)")
      ->check(CLI::IsMember({4, 8}))
      ->capture_default_str();
  CLI::Option* gamma_opt =
      oracle_cmd->add_option("--gamma", oracle.gamma, "Discount factor, in [0, 1)")
          ->capture_default_str();
  oracle_cmd->add_option("--tolerance", oracle.tolerance, "Convergence tolerance")
      ->capture_default_str();
  oracle_cmd->add_option("--max-states", oracle.max_states,
                         "Refuse scenarios with more states than this (0 disables)")
      ->capture_default_str();
  oracle_cmd
      ->add_option("--check", oracle.check_qtable_path,
                   "Verify a trained table: its greedy return must match the optimal "
                   "return from the start cell")
      ->capture_default_str();
  oracle_cmd->add_option("--out-dir", oracle.out_dir, "Output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    return uavrl::kExitValidation;
  }

  gen.command_line = command_line;
  train.command_line = command_line;
  rollout.command_line = command_line;
  compare.command_line = command_line;
  oracle.command_line = command_line;
  oracle.gamma_explicit = gamma_opt->count() > 0;

  try {
    if (gen_cmd->parsed()) return uavrl::cmd_gen_scenario(gen);
    if (train_cmd->parsed()) return uavrl::cmd_train(train);
    if (rollout_cmd->parsed()) return uavrl::cmd_rollout(rollout);
    if (compare_cmd->parsed()) return uavrl::cmd_compare(compare);
    if (oracle_cmd->parsed()) return uavrl::cmd_oracle(oracle);
  } catch (const uavrl::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return uavrl::kExitIo;
  } catch (const uavrl::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return uavrl::kExitValidation;
  } catch (const uavrl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return uavrl::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return uavrl::kExitValidation;
}
