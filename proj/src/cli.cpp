#include "uavrl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "uavrl/csv.hpp"
#include "uavrl/errors.hpp"
#include "uavrl/manifest.hpp"
#include "uavrl/metrics.hpp"
#include "uavrl/oracle.hpp"
#include "uavrl/rng.hpp"
#include "uavrl/svg.hpp"
#include "uavrl/version.hpp"

#include <json.hpp>

namespace fs = std::filesystem;

namespace uavrl {

namespace {

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("failed writing " + path);
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

RunManifest base_manifest(const std::string& command,
                          const std::vector<std::string>& command_line) {
  RunManifest m;
  m.command = command;
  m.command_line = command_line;
  m.tool_version = kToolVersion;
  m.timestamp = iso8601_utc_now();
  return m;
}

std::string pct_or_undefined(const std::optional<double>& pct) {
  if (!pct) return "undefined (zero-length path)";
  return fmt_double(*pct) + "%";
}

}  // namespace

Hyperparams resolve_hyperparams(const HyperparamArgs& args, const Scenario& scenario,
                                std::uint64_t seed) {
  Hyperparams h;
  h.alpha = args.alpha;
  h.gamma = args.gamma;
  h.epsilon = args.epsilon;
  h.epsilon_decay = args.epsilon_decay;
  h.epsilon_min = args.epsilon_min;
  h.episodes = args.episodes;
  h.max_steps_per_episode = args.max_steps == 0 ? default_step_cap(scenario) : args.max_steps;
  h.seed = seed;
  validate(h);
  return h;
}

int cmd_gen_scenario(const GenScenarioArgs& args) {
  if (!(args.width_km > 0.0) || !(args.height_km > 0.0) || !(args.cell_m > 0.0)) {
    throw ValidationError("grid dimensions and cell size must be positive");
  }
  if (args.bs_count < 0) throw ValidationError("base-station count must be >= 0");

  Scenario s;
  s.width_cells = static_cast<int>(std::llround(args.width_km * 1000.0 / args.cell_m));
  s.height_cells = static_cast<int>(std::llround(args.height_km * 1000.0 / args.cell_m));
  if (s.width_cells < 2 || s.height_cells < 2) {
    throw ValidationError("grid must be at least 2x2 cells; got " +
                          std::to_string(s.width_cells) + "x" + std::to_string(s.height_cells));
  }
  s.cell_size_m = args.cell_m;
  s.altitude_m = args.altitude_m;
  s.coverage_radius_m = args.coverage_radius_m;
  s.coverage_ceiling_m = args.coverage_ceiling_m;
  const int mid_y = s.height_cells / 2;
  s.start = {0, mid_y};
  s.goal = {s.width_cells - 1, mid_y};

  if (args.bs_layout == "chain") {
    // Evenly spaced along the start-goal row, endpoints included.
    for (int i = 0; i < args.bs_count; ++i) {
      const double f = args.bs_count == 1 ? 0.5
                                          : static_cast<double>(i) / (args.bs_count - 1);
      const int x = static_cast<int>(std::llround(f * (s.width_cells - 1)));
      s.base_stations.push_back({{x, mid_y}});
    }
  } else if (args.bs_layout == "random") {
    if (args.bs_count > s.cell_count()) {
      throw ValidationError("cannot place " + std::to_string(args.bs_count) +
                            " distinct base stations on " + std::to_string(s.cell_count()) +
                            " cells");
    }
    Pcg32 rng(args.seed);
    std::vector<CellCoord> placed;
    int attempts = 0;
    while (static_cast<int>(placed.size()) < args.bs_count) {
      if (++attempts > 1000000) throw ValidationError("random placement did not terminate");
      const CellCoord c{static_cast<int>(rng.next_below(static_cast<std::uint32_t>(s.width_cells))),
                        static_cast<int>(rng.next_below(static_cast<std::uint32_t>(s.height_cells)))};
      if (std::find(placed.begin(), placed.end(), c) != placed.end()) continue;
      placed.push_back(c);
    }
    for (CellCoord c : placed) s.base_stations.push_back({c});
  } else {
    throw ValidationError("unknown base-station layout \"" + args.bs_layout +
                          "\" (expected chain or random)");
  }

  validate(s);

  ensure_dir(args.out_dir);
  const std::string path = join(args.out_dir, args.name);
  save_scenario_file(s, path);

  RunManifest m = base_manifest("gen-scenario", args.command_line);
  m.scenario_path = path;
  m.scenario_hash = scenario_hash(s);
  if (args.bs_layout == "random") m.seeds.push_back(args.seed);
  m.artifacts = {args.name, "run_manifest.json"};
  write_manifest(m, join(args.out_dir, "run_manifest.json"));

  std::cout << "wrote " << path << " (" << s.width_cells << "x" << s.height_cells << " cells, "
            << s.base_stations.size() << " base stations)\n";
  return kExitOk;
}

int cmd_train(const TrainArgs& args) {
  const Scenario scenario = load_scenario_file(args.scenario_path);
  const Algorithm algorithm = algorithm_from_name(args.algo);
  const ActionSpace space = ActionSpace::from_count(args.actions);
  const Hyperparams h = resolve_hyperparams(args.hyper, scenario, args.seed);
  const CoverageGrid coverage = build_coverage(scenario);

  const TrainResult result = train(scenario, coverage, algorithm, space, h);

  int reached = 0;
  for (const EpisodeRecord& e : result.trace.episodes) {
    if (e.reached_goal) ++reached;
  }

  ensure_dir(args.out_dir);
  const QTableDump dump{result.q, scenario.width_cells, scenario.height_cells, space.count(),
                        algorithm, h};
  save_qtable_file(dump, join(args.out_dir, "qtable.json"));
  write_text_file(join(args.out_dir, "training_curve.csv"),
                  training_curve_csv(result.trace));

  RunManifest m = base_manifest("train", args.command_line);
  m.scenario_path = args.scenario_path;
  m.scenario_hash = scenario_hash(scenario);
  m.algorithms.emplace_back(algorithm_name(algorithm));
  m.seeds.push_back(h.seed);
  m.hyperparams = h;
  m.artifacts = {"qtable.json", "training_curve.csv", "run_manifest.json"};
  write_manifest(m, join(args.out_dir, "run_manifest.json"));

  const EpisodeRecord& last = result.trace.episodes.back();
  std::cout << "trained " << algorithm_name(algorithm) << " for " << h.episodes
            << " episodes (seed " << h.seed << ")\n"
            << "episodes reaching the destination: " << reached << "/" << h.episodes << "\n"
            << "final episode reward: " << fmt_double(last.cumulative_reward) << " in "
            << last.steps << " steps\n"
            << "wrote " << join(args.out_dir, "qtable.json") << "\n"
            << "wrote " << join(args.out_dir, "training_curve.csv") << "\n";
  return kExitOk;
}

int cmd_rollout(const RolloutArgs& args) {
  const Scenario scenario = load_scenario_file(args.scenario_path);
  const QTableDump dump = load_qtable_file(args.qtable_path);
  const ActionSpace space = ActionSpace::from_count(dump.action_count);
  check_shape(dump, scenario, space);
  if (args.step_cap < 0) throw ValidationError("step cap must be >= 0");
  const int cap = args.step_cap == 0 ? default_step_cap(scenario) : args.step_cap;

  const CoverageGrid coverage = build_coverage(scenario);
  const PathResult path = greedy_rollout(scenario, coverage, dump.q, space, cap);

  ensure_dir(args.out_dir);
  write_text_file(join(args.out_dir, "path.csv"), path_csv(path, scenario));
  SvgOptions svg_opts;
  svg_opts.analytic_circles = args.analytic_circles;
  const SvgPathSpec spec{&path, "#1d4ed8",
                         std::string(algorithm_name(dump.algorithm)) + " greedy path"};
  write_text_file(join(args.out_dir, "path.svg"),
                  render_map_svg(scenario, coverage, {&spec, 1}, svg_opts));

  RunManifest m = base_manifest("rollout", args.command_line);
  m.scenario_path = args.scenario_path;
  m.scenario_hash = scenario_hash(scenario);
  m.algorithms.emplace_back(algorithm_name(dump.algorithm));
  m.seeds.push_back(dump.hyperparams.seed);
  m.hyperparams = dump.hyperparams;
  m.artifacts = {"path.csv", "path.svg", "run_manifest.json"};
  write_manifest(m, join(args.out_dir, "run_manifest.json"));

  std::cout << "Destination reached: " << (path.reached_goal ? "yes" : "no") << "\n"
            << "No. of steps to reach the destination: " << path.steps << "\n"
            << "Total travelled distance: " << fmt_double(path.distance_m) << " m\n"
            << "Coverage reliability: " << pct_or_undefined(path.coverage_reliability_pct)
            << "\n"
            << "wrote " << join(args.out_dir, "path.csv") << "\n"
            << "wrote " << join(args.out_dir, "path.svg") << "\n";
  return kExitOk;
}

int cmd_compare(const CompareArgs& args) {
  const Scenario scenario = load_scenario_file(args.scenario_path);
  const ActionSpace space = ActionSpace::from_count(args.actions);
  Hyperparams base = resolve_hyperparams(args.hyper, scenario, 0);

  const ComparisonReport report = compare(scenario, base, space, args.seeds, args.window);

  ensure_dir(args.out_dir);
  write_text_file(join(args.out_dir, "comparison.csv"), comparison_csv(report));
  write_text_file(join(args.out_dir, "report.json"), report_to_json(report));

  const CoverageGrid coverage = build_coverage(scenario);
  std::vector<SvgPathSpec> specs;
  specs.reserve(report.runs.size());
  bool labeled_ql = false;
  bool labeled_sarsa = false;
  for (const RunRecord& r : report.runs) {
    SvgPathSpec spec;
    spec.path = &r.path;
    if (r.algorithm == Algorithm::QLearning) {
      spec.color = "#1d4ed8";
      if (!labeled_ql) {
        spec.label = "qlearning greedy paths";
        labeled_ql = true;
      }
    } else {
      spec.color = "#ea580c";
      if (!labeled_sarsa) {
        spec.label = "sarsa greedy paths";
        labeled_sarsa = true;
      }
    }
    specs.push_back(std::move(spec));
  }
  SvgOptions svg_opts;
  svg_opts.analytic_circles = args.analytic_circles;
  write_text_file(join(args.out_dir, "paths_overlay.svg"),
                  render_map_svg(scenario, coverage, specs, svg_opts));

  RunManifest m = base_manifest("compare", args.command_line);
  m.scenario_path = args.scenario_path;
  m.scenario_hash = report.scenario_hash;
  m.algorithms = {"qlearning", "sarsa"};
  m.seeds = report.seeds;
  m.hyperparams = base;
  m.artifacts = {"comparison.csv", "report.json", "paths_overlay.svg", "run_manifest.json"};
  write_manifest(m, join(args.out_dir, "run_manifest.json"));

  const auto print_summary = [](const AlgorithmSummary& s) {
    std::cout << algorithm_name(s.algorithm) << " (medians over " << s.run_count
              << " seeds, reached destination " << s.runs_reached_goal << "/" << s.run_count
              << "):\n"
              << "  No. of steps to reach the destination: " << fmt_double(s.median_steps)
              << "\n"
              << "  Total travelled distance: " << fmt_double(s.median_distance_m) << " m\n"
              << "  Coverage reliability: " << pct_or_undefined(s.median_coverage_pct) << "\n"
              << "  final-window cumulative reward: " << fmt_double(s.median_final_window_mean)
              << "\n";
  };
  print_summary(report.qlearning);
  print_summary(report.sarsa);
  if (std::isnan(report.reward_ratio)) {
    std::cout << "reward ratio (qlearning/sarsa): undefined\n";
  } else {
    std::cout << "reward ratio (qlearning/sarsa): " << fmt_double(report.reward_ratio) << "\n";
  }
  std::cout << "wrote " << join(args.out_dir, "comparison.csv") << "\n"
            << "wrote " << join(args.out_dir, "report.json") << "\n"
            << "wrote " << join(args.out_dir, "paths_overlay.svg") << "\n";
  return kExitOk;
}

int cmd_oracle(const OracleArgs& args) {
  const Scenario scenario = load_scenario_file(args.scenario_path);
  if (args.max_states > 0 && scenario.cell_count() > args.max_states) {
    throw ValidationError("scenario has " + std::to_string(scenario.cell_count()) +
                          " states, above the --max-states limit of " +
                          std::to_string(args.max_states));
  }
  const ActionSpace space = ActionSpace::from_count(args.actions);

  bool checking = !args.check_qtable_path.empty();
  QTableDump dump{QTable(1, 4), 0, 0, 0, Algorithm::QLearning, {}};
  double gamma = args.gamma;
  if (checking) {
    dump = load_qtable_file(args.check_qtable_path);
    check_shape(dump, scenario, space);
    // The table was trained against a specific discount; check against it
    // unless --gamma was given explicitly.
    if (!args.gamma_explicit) gamma = dump.hyperparams.gamma;
  }

  const CoverageGrid coverage = build_coverage(scenario);
  const ValueTable vt = value_iteration(scenario, coverage, space, gamma, args.tolerance);
  const double start_value = optimal_return(vt, scenario);

  ensure_dir(args.out_dir);
  nlohmann::ordered_json doc;
  doc["format"] = "uavrl-values-v1";
  doc["scenario_hash"] = scenario_hash(scenario);
  doc["width_cells"] = scenario.width_cells;
  doc["height_cells"] = scenario.height_cells;
  doc["action_count"] = space.count();
  doc["gamma"] = gamma;
  doc["tolerance"] = vt.tolerance;
  doc["sweeps"] = vt.sweeps;
  doc["start_value"] = start_value;
  doc["values"] = vt.values;
  doc["policy"] = vt.policy;
  write_text_file(join(args.out_dir, "values.json"), doc.dump(2) + "\n");

  RunManifest m = base_manifest("oracle", args.command_line);
  m.scenario_path = args.scenario_path;
  m.scenario_hash = scenario_hash(scenario);
  m.artifacts = {"values.json", "run_manifest.json"};
  write_manifest(m, join(args.out_dir, "run_manifest.json"));

  std::cout << "optimal return from start: " << fmt_double(start_value) << " (gamma "
            << fmt_double(gamma) << ", " << vt.sweeps << " sweeps)\n"
            << "wrote " << join(args.out_dir, "values.json") << "\n";

  if (!checking) return kExitOk;

  const PathResult path =
      greedy_rollout(scenario, coverage, dump.q, space, default_step_cap(scenario));
  const double ret = discounted_return(path.rewards, gamma);
  const double diff = std::fabs(ret - start_value);
  if (path.reached_goal && diff <= kCheckTolerance) {
    std::cout << "check: greedy return " << fmt_double(ret)
              << " matches the optimal return within " << fmt_double(kCheckTolerance) << "\n";
    return kExitOk;
  }
  std::cout << "check: FAILED; greedy return " << fmt_double(ret) << " vs optimal "
            << fmt_double(start_value) << " (|diff| " << fmt_double(diff) << ", destination "
            << (path.reached_goal ? "reached" : "not reached") << ")\n";
  return kExitCheckFailed;
}

}  // namespace uavrl
