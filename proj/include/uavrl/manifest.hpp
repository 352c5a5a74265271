#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavrl/learner.hpp"

namespace uavrl {

/// Provenance record written by every successful CLI command. Replaying
/// command_line reproduces content-identical artifacts; the timestamp is the
/// only field excluded from determinism comparisons.
struct RunManifest {
  std::string command;
  std::vector<std::string> command_line;  // full argv tail for replay
  std::string scenario_path;
  std::string scenario_hash;
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds;
  std::optional<Hyperparams> hyperparams;
  std::vector<std::string> artifacts;  // every file the run wrote, itself included
  std::string tool_version;
  std::string timestamp;  // ISO 8601 UTC
};

std::string manifest_to_json(const RunManifest& m);
void write_manifest(const RunManifest& m, const std::string& path);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string iso8601_utc_now();

}  // namespace uavrl
