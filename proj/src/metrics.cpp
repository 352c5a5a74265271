#include "uavrl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "uavrl/errors.hpp"

namespace uavrl {

std::optional<double> coverage_reliability(std::span<const CellCoord> cells,
                                           const CoverageGrid& coverage,
                                           const Scenario& scenario) {
  if (cells.size() < 2) return std::nullopt;  // zero-length path: undefined, not 0 or 100
  double reliable_m = 0.0;
  double total_m = 0.0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const double d = step_distance_m(scenario, State{cells[i - 1]}, State{cells[i]});
    total_m += d;
    // A segment counts as reliable when the cell it arrives in is covered.
    if (coverage.reliable(cells[i])) reliable_m += d;
  }
  if (total_m == 0.0) return std::nullopt;  // all moves absorbed in place
  return reliable_m / total_m * 100.0;
}

PathResult make_path_result(const Scenario& scenario, const CoverageGrid& coverage,
                            std::vector<CellCoord> cells, std::vector<double> rewards,
                            bool reached_goal) {
  if (cells.empty()) throw ValidationError("path must contain at least the start cell");
  if (rewards.size() + 1 != cells.size()) {
    throw ValidationError("path rewards must have one entry per move");
  }
  PathResult r;
  r.reached_goal = reached_goal;
  r.steps = static_cast<int>(rewards.size());
  r.distance_m = 0.0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    r.distance_m += step_distance_m(scenario, State{cells[i - 1]}, State{cells[i]});
  }
  r.coverage_reliability_pct = coverage_reliability(cells, coverage, scenario);
  r.cells = std::move(cells);
  r.rewards = std::move(rewards);
  return r;
}

double discounted_return(std::span<const double> rewards, double gamma) {
  double g = 0.0;
  for (std::size_t i = rewards.size(); i > 0; --i) {
    g = rewards[i - 1] + gamma * g;
  }
  return g;
}

TrainingSummary summarize_training(const TrainingTrace& trace, int window) {
  const std::size_t n = trace.episodes.size();
  if (window <= 0 || static_cast<std::size_t>(window) > n) {
    throw ValidationError("summary window must be in [1, " + std::to_string(n) +
                          "], got " + std::to_string(window));
  }
  TrainingSummary s;
  s.moving_average.resize(n, 0.0);
  double running = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    running += trace.episodes[i].cumulative_reward;
    if (i >= static_cast<std::size_t>(window)) {
      running -= trace.episodes[i - static_cast<std::size_t>(window)].cumulative_reward;
    }
    const std::size_t span = std::min(i + 1, static_cast<std::size_t>(window));
    s.moving_average[i] = running / static_cast<double>(span);
  }
  const std::size_t span = static_cast<std::size_t>(window);
  double sum = 0.0;
  for (std::size_t i = n - span; i < n; ++i) sum += trace.episodes[i].cumulative_reward;
  s.final_window_mean = sum / static_cast<double>(span);
  return s;
}

namespace {

double median(std::vector<double> xs) {
  if (xs.empty()) throw ValidationError("median of an empty set");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

AlgorithmSummary summarize_runs(Algorithm algorithm, const std::vector<RunRecord>& runs) {
  AlgorithmSummary s;
  s.algorithm = algorithm;
  std::vector<double> steps;
  std::vector<double> dist;
  std::vector<double> cover;
  std::vector<double> reward;
  for (const RunRecord& r : runs) {
    if (r.algorithm != algorithm) continue;
    ++s.run_count;
    if (r.path.reached_goal) ++s.runs_reached_goal;
    steps.push_back(static_cast<double>(r.path.steps));
    dist.push_back(r.path.distance_m);
    if (r.path.coverage_reliability_pct) cover.push_back(*r.path.coverage_reliability_pct);
    reward.push_back(r.final_window_mean);
  }
  if (s.run_count == 0) throw ValidationError("comparison needs at least one run per algorithm");
  s.median_steps = median(steps);
  s.median_distance_m = median(dist);
  if (!cover.empty()) s.median_coverage_pct = median(std::move(cover));
  s.median_final_window_mean = median(std::move(reward));
  return s;
}

}  // namespace

ComparisonReport compare(const Scenario& scenario, const Hyperparams& base,
                         const ActionSpace& space, std::vector<std::uint64_t> seeds,
                         int window) {
  validate(scenario);
  validate(base);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  if (seeds.empty()) throw ValidationError("comparison needs at least one seed");
  if (window <= 0 || window > base.episodes) {
    throw ValidationError("summary window must be in [1, episodes]");
  }

  const CoverageGrid coverage = build_coverage(scenario);
  const Algorithm algos[2] = {Algorithm::QLearning, Algorithm::Sarsa};

  const int total = static_cast<int>(seeds.size()) * 2;
  std::vector<RunRecord> runs(static_cast<std::size_t>(total));
  // Fan-out: each (algorithm, seed) run is independent and writes only its own
  // slot, so the merged result does not depend on thread count.
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < total; ++i) {
    const Algorithm algorithm = algos[i % 2];
    const std::uint64_t seed = seeds[static_cast<std::size_t>(i / 2)];
    Hyperparams h = base;
    h.seed = seed;
    TrainResult trained = train(scenario, coverage, algorithm, space, h);
    RunRecord& rec = runs[static_cast<std::size_t>(i)];
    rec.algorithm = algorithm;
    rec.seed = seed;
    rec.path = greedy_rollout(scenario, coverage, trained.q, space, h.max_steps_per_episode);
    rec.final_window_mean = summarize_training(trained.trace, window).final_window_mean;
  }

  std::sort(runs.begin(), runs.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    return a.seed < b.seed;
  });

  ComparisonReport report;
  report.scenario_hash = scenario_hash(scenario);
  report.hyperparams = base;
  report.action_count = space.count();
  report.window = window;
  report.seeds = std::move(seeds);
  report.qlearning = summarize_runs(Algorithm::QLearning, runs);
  report.sarsa = summarize_runs(Algorithm::Sarsa, runs);
  const double denom = report.sarsa.median_final_window_mean;
  report.reward_ratio = denom == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                     : report.qlearning.median_final_window_mean / denom;
  report.runs = std::move(runs);
  return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json summary_json(const AlgorithmSummary& s) {
  ordered_json j;
  j["algorithm"] = std::string(algorithm_name(s.algorithm));
  j["run_count"] = s.run_count;
  j["runs_reached_goal"] = s.runs_reached_goal;
  j["median_steps"] = s.median_steps;
  j["median_distance_m"] = s.median_distance_m;
  if (s.median_coverage_pct) {
    j["median_coverage_reliability_pct"] = *s.median_coverage_pct;
  } else {
    j["median_coverage_reliability_pct"] = nullptr;
  }
  j["median_final_window_mean_reward"] = s.median_final_window_mean;
  return j;
}

}  // namespace

std::string report_to_json(const ComparisonReport& report) {
  ordered_json doc;
  doc["format"] = "uavrl-report-v1";
  doc["scenario_hash"] = report.scenario_hash;
  doc["action_count"] = report.action_count;
  doc["window"] = report.window;
  ordered_json seeds = ordered_json::array();
  for (std::uint64_t s : report.seeds) seeds.push_back(s);
  doc["seeds"] = std::move(seeds);
  ordered_json h;
  h["alpha"] = report.hyperparams.alpha;
  h["gamma"] = report.hyperparams.gamma;
  h["epsilon"] = report.hyperparams.epsilon;
  h["epsilon_decay"] = report.hyperparams.epsilon_decay;
  h["epsilon_min"] = report.hyperparams.epsilon_min;
  h["episodes"] = report.hyperparams.episodes;
  h["max_steps_per_episode"] = report.hyperparams.max_steps_per_episode;
  doc["hyperparams"] = std::move(h);
  ordered_json runs = ordered_json::array();
  for (const RunRecord& r : report.runs) {
    ordered_json jr;
    jr["algorithm"] = std::string(algorithm_name(r.algorithm));
    jr["seed"] = r.seed;
    jr["reached_goal"] = r.path.reached_goal;
    jr["steps"] = r.path.steps;
    jr["distance_m"] = r.path.distance_m;
    if (r.path.coverage_reliability_pct) {
      jr["coverage_reliability_pct"] = *r.path.coverage_reliability_pct;
    } else {
      jr["coverage_reliability_pct"] = nullptr;
    }
    jr["final_window_mean_reward"] = r.final_window_mean;
    runs.push_back(std::move(jr));
  }
  doc["runs"] = std::move(runs);
  doc["qlearning"] = summary_json(report.qlearning);
  doc["sarsa"] = summary_json(report.sarsa);
  if (std::isnan(report.reward_ratio)) {
    doc["reward_ratio"] = nullptr;
  } else {
    doc["reward_ratio"] = report.reward_ratio;
  }
  return doc.dump(2) + "\n";
}

}  // namespace uavrl
