#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uavrl/learner.hpp"

namespace uavrl {

/// An evaluated path with its headline metrics. coverage_reliability_pct is
/// empty for zero-length paths, where the ratio is undefined; report it as
/// "undefined (zero-length path)" rather than 0 or 100.
struct PathResult {
  std::vector<CellCoord> cells;  // visited cells, start first
  std::vector<double> rewards;   // one entry per step
  bool reached_goal = false;
  int steps = 0;
  double distance_m = 0.0;
  std::optional<double> coverage_reliability_pct;
};

/// Share of path length whose steps land in reliable cells, as a percentage:
/// 100 * (sum of reliable step lengths) / (total length). A step counts as
/// reliable when its destination cell is reliable, mirroring the reward
/// rule, which fires on the arrival cell. Returns nullopt when the total
/// length is zero.
std::optional<double> coverage_reliability(std::span<const CellCoord> cells,
                                           const CoverageGrid& coverage,
                                           const Scenario& scenario);

/// Assembles a PathResult, computing steps, distance and coverage
/// reliability from the cell sequence.
PathResult make_path_result(const Scenario& scenario, const CoverageGrid& coverage,
                            std::vector<CellCoord> cells, std::vector<double> rewards,
                            bool reached_goal);

/// Discounted return of a reward sequence, composed backward:
/// G = r_0 + gamma * (r_1 + gamma * (...)).
double discounted_return(std::span<const double> rewards, double gamma);

struct TrainingSummary {
  /// Trailing moving average of per-episode cumulative reward; entry i
  /// averages the last min(i+1, window) episodes.
  std::vector<double> moving_average;
  /// Mean cumulative reward over the final `window` episodes.
  double final_window_mean = 0.0;
};

/// window must be in [1, episode count].
TrainingSummary summarize_training(const TrainingTrace& trace, int window);

struct RunRecord {
  Algorithm algorithm = Algorithm::QLearning;
  std::uint64_t seed = 0;
  PathResult path;
  double final_window_mean = 0.0;
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::QLearning;
  int run_count = 0;
  int runs_reached_goal = 0;
  double median_steps = 0.0;
  double median_distance_m = 0.0;
  /// Median over runs whose coverage reliability is defined; empty if none is.
  std::optional<double> median_coverage_pct;
  double median_final_window_mean = 0.0;
};

struct ComparisonReport {
  std::vector<RunRecord> runs;  // ordered by (algorithm, seed), seeds ascending
  AlgorithmSummary qlearning;
  AlgorithmSummary sarsa;
  /// qlearning.median_final_window_mean / sarsa.median_final_window_mean;
  /// NaN when the denominator is zero.
  double reward_ratio = 0.0;
  std::string scenario_hash;
  Hyperparams hyperparams;  // seed field unused; per-run seeds below
  int action_count = 8;
  int window = 0;
  std::vector<std::uint64_t> seeds;  // ascending
};

/// Trains both algorithms on every seed, rolls out the greedy policies and
/// aggregates medians. Runs fan out across threads; results are merged in
/// sorted seed order, so concurrency never affects the report. The seed
/// field of `base` is ignored in favor of `seeds`.
ComparisonReport compare(const Scenario& scenario, const Hyperparams& base,
                         const ActionSpace& space, std::vector<std::uint64_t> seeds,
                         int window);

/// Report document: JSON embedding the scenario hash, hyperparameters,
/// seeds, per-run rows and medians. Deterministic bytes for identical inputs.
std::string report_to_json(const ComparisonReport& report);

}  // namespace uavrl
