#pragma once

#include <vector>

#include "uavrl/mdp.hpp"

namespace uavrl {

/// Optimal state values and the derived greedy policy, computed by value
/// iteration over the exact same transition and reward functions the
/// learners see. Serves as the independent ground truth when verifying
/// trained policies on small instances.
struct ValueTable {
  std::vector<double> values;  // V*(s), state-indexed
  std::vector<int> policy;     // greedy action index per state; -1 at the goal
  double gamma = 0.0;
  double tolerance = 0.0;
  int sweeps = 0;
  std::vector<double> sweep_deltas;  // max-norm change per sweep
};

inline constexpr double kDefaultValueTolerance = 1e-10;

/// Synchronous (Jacobi) value iteration: V(s) <- max_a [r(s,a) + gamma * V(s')],
/// goal value pinned at 0. Sweeps until the max update magnitude drops below
/// `tolerance`, then keeps sweeping until the vector is bit-stationary so
/// that greedy returns recompose to V*(start) exactly. Each sweep reads only
/// the previous vector, so the OpenMP variant is bit-identical to the serial
/// one for any thread count.
ValueTable value_iteration(const Scenario& scenario, const CoverageGrid& coverage,
                           const ActionSpace& space, double gamma,
                           double tolerance = kDefaultValueTolerance);

/// Serial reference for value_iteration, kept for tests and benchmarks.
ValueTable value_iteration_serial(const Scenario& scenario, const CoverageGrid& coverage,
                                  const ActionSpace& space, double gamma,
                                  double tolerance = kDefaultValueTolerance);

/// V*(start).
double optimal_return(const ValueTable& v, const Scenario& scenario);

}  // namespace uavrl
