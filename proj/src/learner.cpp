#include "uavrl/learner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uavrl/errors.hpp"
#include "uavrl/metrics.hpp"

namespace uavrl {

std::string_view algorithm_name(Algorithm a) {
  return a == Algorithm::QLearning ? "qlearning" : "sarsa";
}

Algorithm algorithm_from_name(std::string_view name) {
  if (name == "qlearning") return Algorithm::QLearning;
  if (name == "sarsa") return Algorithm::Sarsa;
  throw ValidationError("unknown algorithm \"" + std::string(name) +
                        "\" (expected qlearning or sarsa)");
}

int QTable::greedy_action(int state) const {
  const auto r = row(state);
  int best = 0;
  for (int a = 1; a < action_count_; ++a) {
    if (r[a] > r[best]) best = a;
  }
  return best;
}

int default_step_cap(const Scenario& s) { return 4 * (s.width_cells + s.height_cells); }

Hyperparams default_hyperparams(const Scenario& s) {
  Hyperparams h;
  h.max_steps_per_episode = default_step_cap(s);
  return h;
}

void validate(const Hyperparams& h) {
  if (!(h.alpha > 0.0 && h.alpha <= 1.0)) {
    throw ValidationError("hyperparams.alpha must be in (0, 1]");
  }
  if (!(h.gamma >= 0.0 && h.gamma < 1.0)) {
    throw ValidationError("hyperparams.gamma must be in [0, 1)");
  }
  if (!(h.epsilon >= 0.0 && h.epsilon <= 1.0)) {
    throw ValidationError("hyperparams.epsilon must be in [0, 1]");
  }
  if (!(h.epsilon_decay > 0.0 && h.epsilon_decay <= 1.0)) {
    throw ValidationError("hyperparams.epsilon_decay must be in (0, 1]");
  }
  if (!(h.epsilon_min >= 0.0 && h.epsilon_min <= 1.0)) {
    throw ValidationError("hyperparams.epsilon_min must be in [0, 1]");
  }
  if (h.epsilon_min > h.epsilon) {
    throw ValidationError("hyperparams.epsilon_min must not exceed epsilon");
  }
  if (h.episodes <= 0) {
    throw ValidationError("hyperparams.episodes must be positive");
  }
  if (h.max_steps_per_episode <= 0) {
    throw ValidationError("hyperparams.max_steps_per_episode must be positive");
  }
}

int select_action(const QTable& q, const ActionSpace& space, int state_index, double epsilon,
                  Pcg32& rng) {
  const int k = space.count();
  // Draw order (part of the reproducibility contract): one unit draw for the
  // explore/exploit branch, then one bounded draw for an exploring step, or
  // one bounded draw for a greedy tie-break only when ties exist.
  if (rng.next_double() < epsilon) {
    return static_cast<int>(rng.next_below(static_cast<std::uint32_t>(k)));
  }
  const auto row = q.row(state_index);
  double best = row[0];
  int best_index = 0;
  int ties = 1;
  for (int a = 1; a < k; ++a) {
    if (row[a] > best) {
      best = row[a];
      best_index = a;
      ties = 1;
    } else if (row[a] == best) {
      ++ties;
    }
  }
  if (ties == 1) return best_index;
  int pick = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(ties)));
  for (int a = 0; a < k; ++a) {
    if (row[a] == best) {
      if (pick == 0) return a;
      --pick;
    }
  }
  return best_index;  // unreachable
}

double q_learning_update(QTable& q, const Scenario& scenario, const ActionSpace& space,
                         const Transition& t, const Hyperparams& h) {
  const int s = state_index(scenario, t.state);
  const int a = space.index_of(t.action);
  double bootstrap = 0.0;
  if (!t.terminal) {
    const auto row = q.row(state_index(scenario, t.next_state));
    bootstrap = *std::max_element(row.begin(), row.end());
  }
  double& entry = q.at(s, a);
  entry += h.alpha * (t.reward + h.gamma * bootstrap - entry);
  return entry;
}

double sarsa_update(QTable& q, const Scenario& scenario, const ActionSpace& space,
                    const Transition& t, int next_action_index, const Hyperparams& h) {
  const int s = state_index(scenario, t.state);
  const int a = space.index_of(t.action);
  double bootstrap = 0.0;
  if (!t.terminal) {
    if (next_action_index < 0 || next_action_index >= space.count()) {
      throw ValidationError("sarsa_update: non-terminal transition needs the next action");
    }
    bootstrap = q.at(state_index(scenario, t.next_state), next_action_index);
  }
  double& entry = q.at(s, a);
  entry += h.alpha * (t.reward + h.gamma * bootstrap - entry);
  return entry;
}

TrainResult train(const Scenario& scenario, const CoverageGrid& coverage, Algorithm algorithm,
                  const ActionSpace& space, const Hyperparams& h, const StepHook& hook) {
  validate(scenario);
  validate(h);

  QTable q(scenario.cell_count(), space.count());
  TrainingTrace trace;
  trace.algorithm = algorithm;
  trace.seed = h.seed;
  trace.episodes.reserve(static_cast<std::size_t>(h.episodes));

  Pcg32 rng(h.seed);
  double epsilon = h.epsilon;

  for (int episode = 0; episode < h.episodes; ++episode) {
    State s{scenario.start};
    double cumulative = 0.0;
    int steps = 0;
    bool reached = false;

    if (algorithm == Algorithm::QLearning) {
      while (steps < h.max_steps_per_episode) {
        const int a = select_action(q, space, state_index(scenario, s), epsilon, rng);
        const Transition t = apply_action(scenario, coverage, s, space.at(a));
        const double updated = q_learning_update(q, scenario, space, t, h);
        cumulative += t.reward;
        if (hook) hook(StepEvent{episode, steps, t, a, -1, updated, q});
        ++steps;
        s = t.next_state;
        if (t.terminal) {
          reached = true;
          break;
        }
      }
    } else {
      int a = select_action(q, space, state_index(scenario, s), epsilon, rng);
      while (steps < h.max_steps_per_episode) {
        const Transition t = apply_action(scenario, coverage, s, space.at(a));
        int next_a = -1;
        if (!t.terminal) {
          // On-policy: the bootstrap action is the action executed next.
          next_a = select_action(q, space, state_index(scenario, t.next_state), epsilon, rng);
        }
        const double updated = sarsa_update(q, scenario, space, t, next_a, h);
        cumulative += t.reward;
        if (hook) hook(StepEvent{episode, steps, t, a, next_a, updated, q});
        ++steps;
        s = t.next_state;
        a = next_a;
        if (t.terminal) {
          reached = true;
          break;
        }
      }
    }

    trace.episodes.push_back({episode, cumulative, steps, epsilon, reached});
    epsilon = std::max(h.epsilon_min, epsilon * h.epsilon_decay);
  }

  return {std::move(q), std::move(trace)};
}

PathResult greedy_rollout(const Scenario& scenario, const CoverageGrid& coverage, const QTable& q,
                          const ActionSpace& space, int step_cap) {
  validate(scenario);
  if (q.state_count() != scenario.cell_count() || q.action_count() != space.count()) {
    throw ValidationError("greedy_rollout: table shaped " + std::to_string(q.state_count()) +
                          "x" + std::to_string(q.action_count()) + " does not match " +
                          std::to_string(scenario.cell_count()) + " states x " +
                          std::to_string(space.count()) + " actions");
  }
  if (step_cap < 0) throw ValidationError("greedy_rollout: step_cap must be >= 0");

  std::vector<CellCoord> cells{scenario.start};
  std::vector<double> rewards;
  State s{scenario.start};
  bool reached = false;
  for (int step = 0; step < step_cap; ++step) {
    const int a = q.greedy_action(state_index(scenario, s));
    const Transition t = apply_action(scenario, coverage, s, space.at(a));
    cells.push_back(t.next_state.cell);
    rewards.push_back(t.reward);
    s = t.next_state;
    if (t.terminal) {
      reached = true;
      break;
    }
  }
  return make_path_result(scenario, coverage, std::move(cells), std::move(rewards), reached);
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kQTableFormat = "uavrl-qtable-v1";

ordered_json hyperparams_json(const Hyperparams& h) {
  ordered_json j;
  j["alpha"] = h.alpha;
  j["gamma"] = h.gamma;
  j["epsilon"] = h.epsilon;
  j["epsilon_decay"] = h.epsilon_decay;
  j["epsilon_min"] = h.epsilon_min;
  j["episodes"] = h.episodes;
  j["max_steps_per_episode"] = h.max_steps_per_episode;
  j["seed"] = h.seed;
  return j;
}

Hyperparams hyperparams_from_json(const json& j) {
  Hyperparams h;
  h.alpha = j.at("alpha").get<double>();
  h.gamma = j.at("gamma").get<double>();
  h.epsilon = j.at("epsilon").get<double>();
  h.epsilon_decay = j.at("epsilon_decay").get<double>();
  h.epsilon_min = j.at("epsilon_min").get<double>();
  h.episodes = j.at("episodes").get<int>();
  h.max_steps_per_episode = j.at("max_steps_per_episode").get<int>();
  h.seed = j.at("seed").get<std::uint64_t>();
  return h;
}

}  // namespace

std::string save_qtable(const QTableDump& dump) {
  ordered_json doc;
  doc["format"] = kQTableFormat;
  doc["width_cells"] = dump.width_cells;
  doc["height_cells"] = dump.height_cells;
  doc["action_count"] = dump.action_count;
  doc["algorithm"] = std::string(algorithm_name(dump.algorithm));
  doc["hyperparams"] = hyperparams_json(dump.hyperparams);
  ordered_json values = ordered_json::array();
  for (double v : dump.q.values()) values.push_back(v);
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

QTableDump load_qtable(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("qtable: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kQTableFormat) {
      throw ParseError("qtable: unsupported format \"" +
                       doc.at("format").get<std::string>() + "\"");
    }
    const int width = doc.at("width_cells").get<int>();
    const int height = doc.at("height_cells").get<int>();
    const int actions = doc.at("action_count").get<int>();
    if (width < 2 || height < 2) throw ValidationError("qtable: grid dims must be >= 2");
    ActionSpace::from_count(actions);  // validates 4 or 8
    const Algorithm algorithm = algorithm_from_name(doc.at("algorithm").get<std::string>());
    const Hyperparams h = hyperparams_from_json(doc.at("hyperparams"));

    const json& values = doc.at("values");
    const std::size_t expected =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * actions;
    if (!values.is_array() || values.size() != expected) {
      throw ValidationError("qtable: expected " + std::to_string(expected) +
                            " values for " + std::to_string(width) + "x" +
                            std::to_string(height) + "x" + std::to_string(actions) + ", got " +
                            std::to_string(values.size()));
    }
    QTableDump dump{QTable(width * height, actions), width, height, actions, algorithm, h};
    std::size_t i = 0;
    for (int s = 0; s < width * height; ++s) {
      for (int a = 0; a < actions; ++a) {
        dump.q.at(s, a) = values.at(i++).get<double>();
      }
    }
    return dump;
  } catch (const json::exception& e) {
    throw ParseError(std::string("qtable: ") + e.what());
  }
}

QTableDump load_qtable_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open qtable file: " + path);
  return load_qtable(in);
}

void save_qtable_file(const QTableDump& dump, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write qtable file: " + path);
  out << save_qtable(dump);
  if (!out) throw IoError("failed writing qtable file: " + path);
}

void check_shape(const QTableDump& dump, const Scenario& scenario, const ActionSpace& space) {
  if (dump.width_cells != scenario.width_cells || dump.height_cells != scenario.height_cells ||
      dump.action_count != space.count()) {
    throw ValidationError(
        "qtable shaped " + std::to_string(dump.width_cells) + "x" +
        std::to_string(dump.height_cells) + "x" + std::to_string(dump.action_count) +
        " does not match scenario " + std::to_string(scenario.width_cells) + "x" +
        std::to_string(scenario.height_cells) + "x" + std::to_string(space.count()));
  }
}

}  // namespace uavrl
