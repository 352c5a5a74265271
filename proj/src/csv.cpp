#include "uavrl/csv.hpp"

#include <charconv>
#include <system_error>

#include "uavrl/errors.hpp"

namespace uavrl {

std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw ValidationError("cannot format double");
  return std::string(buf, res.ptr);
}

std::string training_curve_csv(const TrainingTrace& trace) {
  std::string out = "episode,cumulative_reward,steps,epsilon,reached_goal\n";
  for (const EpisodeRecord& e : trace.episodes) {
    out += std::to_string(e.episode);
    out += ',';
    out += fmt_double(e.cumulative_reward);
    out += ',';
    out += std::to_string(e.steps);
    out += ',';
    out += fmt_double(e.epsilon);
    out += ',';
    out += e.reached_goal ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string path_csv(const PathResult& path, const Scenario& scenario) {
  std::string out = "step,x,y,reward,running_distance_m\n";
  double running = 0.0;
  for (std::size_t i = 0; i < path.cells.size(); ++i) {
    if (i > 0) {
      running += step_distance_m(scenario, State{path.cells[i - 1]}, State{path.cells[i]});
    }
    out += std::to_string(i);
    out += ',';
    out += std::to_string(path.cells[i].x);
    out += ',';
    out += std::to_string(path.cells[i].y);
    out += ',';
    if (i > 0) out += fmt_double(path.rewards[i - 1]);
    out += ',';
    out += fmt_double(running);
    out += '\n';
  }
  return out;
}

namespace {

void append_run_tail(std::string& out, bool reached, double steps, double distance,
                     const std::optional<double>& coverage, double reward) {
  out += reached ? '1' : '0';
  out += ',';
  out += fmt_double(steps);
  out += ',';
  out += fmt_double(distance);
  out += ',';
  if (coverage) out += fmt_double(*coverage);
  out += ',';
  out += fmt_double(reward);
  out += '\n';
}

}  // namespace

std::string comparison_csv(const ComparisonReport& report) {
  std::string out =
      "kind,algorithm,seed,reached_goal,steps,distance_m,"
      "coverage_reliability_pct,final_window_mean_reward\n";
  for (const RunRecord& r : report.runs) {
    out += "run,";
    out += algorithm_name(r.algorithm);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    append_run_tail(out, r.path.reached_goal, static_cast<double>(r.path.steps),
                    r.path.distance_m, r.path.coverage_reliability_pct, r.final_window_mean);
  }
  for (const AlgorithmSummary* s : {&report.qlearning, &report.sarsa}) {
    out += "median,";
    out += algorithm_name(s->algorithm);
    out += ",,";  // medians aggregate over seeds
    append_run_tail(out, s->runs_reached_goal == s->run_count, s->median_steps,
                    s->median_distance_m, s->median_coverage_pct, s->median_final_window_mean);
  }
  return out;
}

}  // namespace uavrl
