#include "uavrl/manifest.hpp"

#include <ctime>
#include <fstream>

#include <json.hpp>

#include "uavrl/errors.hpp"
#include "uavrl/version.hpp"

namespace uavrl {

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::ordered_json doc;
  doc["format"] = "uavrl-manifest-v1";
  doc["command"] = m.command;
  doc["command_line"] = m.command_line;
  doc["scenario_path"] = m.scenario_path;
  doc["scenario_hash"] = m.scenario_hash;
  doc["algorithms"] = m.algorithms;
  doc["seeds"] = m.seeds;
  if (m.hyperparams) {
    nlohmann::ordered_json h;
    h["alpha"] = m.hyperparams->alpha;
    h["gamma"] = m.hyperparams->gamma;
    h["epsilon"] = m.hyperparams->epsilon;
    h["epsilon_decay"] = m.hyperparams->epsilon_decay;
    h["epsilon_min"] = m.hyperparams->epsilon_min;
    h["episodes"] = m.hyperparams->episodes;
    h["max_steps_per_episode"] = m.hyperparams->max_steps_per_episode;
    doc["hyperparams"] = std::move(h);
  } else {
    doc["hyperparams"] = nullptr;
  }
  doc["artifacts"] = m.artifacts;
  doc["tool_version"] = m.tool_version;
  doc["timestamp"] = m.timestamp;
  return doc.dump(2) + "\n";
}

void write_manifest(const RunManifest& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest: " + path);
  out << manifest_to_json(m);
  if (!out) throw IoError("failed writing manifest: " + path);
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace uavrl
