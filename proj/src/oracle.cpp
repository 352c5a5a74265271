#include "uavrl/oracle.hpp"

#include <cmath>
#include <limits>

#include "uavrl/errors.hpp"

namespace uavrl {

namespace {

// One Bellman backup for a single state. Returns the best value and writes the
// lowest-index maximizing action to *best_action (-1 for the goal state).
double backup_state(const Scenario& scenario, const CoverageGrid& coverage,
                    const ActionSpace& space, const std::vector<double>& v, int s,
                    double gamma, int* best_action) {
  const int x = s % scenario.width_cells;
  const int y = s / scenario.width_cells;
  const State state{CellCoord{x, y}};
  if (state.cell == scenario.goal) {
    if (best_action) *best_action = -1;
    return 0.0;
  }
  double best = -std::numeric_limits<double>::infinity();
  int arg = 0;
  for (int a = 0; a < space.count(); ++a) {
    const Transition t = apply_action(scenario, coverage, state, space.at(a));
    const double cont = t.terminal ? 0.0 : v[static_cast<std::size_t>(
                                               state_index(scenario, t.next_state))];
    const double value = t.reward + gamma * cont;
    if (value > best) {
      best = value;
      arg = a;
    }
  }
  if (best_action) *best_action = arg;
  return best;
}

void validate_inputs(const Scenario& scenario, const CoverageGrid& coverage, double gamma,
                     double tolerance) {
  validate(scenario);
  if (coverage.width() != scenario.width_cells || coverage.height() != scenario.height_cells) {
    throw ValidationError("value iteration: coverage grid does not match the scenario");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw ValidationError("value iteration: gamma must be in [0, 1)");
  }
  if (!(tolerance > 0.0)) {
    throw ValidationError("value iteration: tolerance must be positive");
  }
}

// Shared driver. Each sweep computes new values from the previous iterate only
// (Jacobi), so per-state work is independent and the parallel variant is
// bit-identical to the serial one.
template <typename SweepFn>
ValueTable iterate(const Scenario& scenario, const CoverageGrid& coverage,
                   const ActionSpace& space, double gamma, double tolerance, SweepFn&& sweep) {
  const int n = scenario.cell_count();
  ValueTable table;
  table.gamma = gamma;
  table.tolerance = tolerance;
  table.values.assign(static_cast<std::size_t>(n), 0.0);
  table.policy.assign(static_cast<std::size_t>(n), -1);

  std::vector<double> next(static_cast<std::size_t>(n), 0.0);
  // Phase 1: sweep until the max update falls below tolerance.
  // Phase 2: keep sweeping until a sweep changes nothing at all, so the fixed
  // point is exact in floating point and greedy returns recompose to it
  // without accumulating the tolerance.
  const int max_sweeps = 100000;
  const int max_refine = 256;
  bool converged = false;
  int refine_left = max_refine;
  for (int sweep_no = 0; sweep_no < max_sweeps; ++sweep_no) {
    const double delta = sweep(table.values, next);
    table.values.swap(next);
    table.sweep_deltas.push_back(delta);
    ++table.sweeps;
    if (delta == 0.0) {
      converged = true;
      break;
    }
    if (delta < tolerance && --refine_left <= 0) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ValidationError("value iteration failed to converge within " +
                          std::to_string(max_sweeps) + " sweeps");
  }

  for (int s = 0; s < n; ++s) {
    int a = -1;
    backup_state(scenario, coverage, space, table.values, s, gamma, &a);
    table.policy[static_cast<std::size_t>(s)] = a;
  }
  return table;
}

}  // namespace

ValueTable value_iteration_serial(const Scenario& scenario, const CoverageGrid& coverage,
                                  const ActionSpace& space, double gamma, double tolerance) {
  validate_inputs(scenario, coverage, gamma, tolerance);
  const int n = scenario.cell_count();
  return iterate(scenario, coverage, space, gamma, tolerance,
                 [&](const std::vector<double>& v, std::vector<double>& next) {
                   double delta = 0.0;
                   for (int s = 0; s < n; ++s) {
                     const double value =
                         backup_state(scenario, coverage, space, v, s, gamma, nullptr);
                     const double change = std::fabs(value - v[static_cast<std::size_t>(s)]);
                     if (change > delta) delta = change;
                     next[static_cast<std::size_t>(s)] = value;
                   }
                   return delta;
                 });
}

ValueTable value_iteration(const Scenario& scenario, const CoverageGrid& coverage,
                           const ActionSpace& space, double gamma, double tolerance) {
  validate_inputs(scenario, coverage, gamma, tolerance);
  const int n = scenario.cell_count();
  return iterate(scenario, coverage, space, gamma, tolerance,
                 [&](const std::vector<double>& v, std::vector<double>& next) {
                   double delta = 0.0;
#pragma omp parallel for schedule(static) reduction(max : delta)
                   for (int s = 0; s < n; ++s) {
                     const double value =
                         backup_state(scenario, coverage, space, v, s, gamma, nullptr);
                     const double change = std::fabs(value - v[static_cast<std::size_t>(s)]);
                     if (change > delta) delta = change;
                     next[static_cast<std::size_t>(s)] = value;
                   }
                   return delta;
                 });
}

double optimal_return(const ValueTable& v, const Scenario& scenario) {
  const int s = state_index(scenario, State{scenario.start});
  return v.values[static_cast<std::size_t>(s)];
}

}  // namespace uavrl
