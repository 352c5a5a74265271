#pragma once

#include <string>

#include "uavrl/metrics.hpp"

namespace uavrl {

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string fmt_double(double v);

// CSV emitters. Column sets are fixed; see the README for the layouts.

/// Columns: episode,cumulative_reward,steps,epsilon,reached_goal
std::string training_curve_csv(const TrainingTrace& trace);

/// Columns: step,x,y,reward,running_distance_m; one row per visited cell,
/// the start row with an empty reward.
std::string path_csv(const PathResult& path, const Scenario& scenario);

/// Columns: kind,algorithm,seed,reached_goal,steps,distance_m,
/// coverage_reliability_pct,final_window_mean_reward; one "run" row per
/// (algorithm, seed) followed by one "median" row per algorithm.
std::string comparison_csv(const ComparisonReport& report);

}  // namespace uavrl
