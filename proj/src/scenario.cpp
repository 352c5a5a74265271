#include "uavrl/scenario.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "uavrl/errors.hpp"

namespace uavrl {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string coord_str(CellCoord c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

/// Per-cell reliability predicate shared by both coverage kernels. Squared
/// distances keep the closed-disk boundary exact when radius and cell size
/// are exact in binary.
bool cell_reliable(const Scenario& s, int x, int y) {
  const double radius_sq = s.coverage_radius_m * s.coverage_radius_m;
  for (const BaseStation& bs : s.base_stations) {
    const double dx = (x - bs.cell.x) * s.cell_size_m;
    const double dy = (y - bs.cell.y) * s.cell_size_m;
    if (dx * dx + dy * dy <= radius_sq) return true;
  }
  return false;
}

}  // namespace

void validate(const Scenario& s) {
  if (s.width_cells < 2) {
    throw ValidationError("scenario.width_cells must be >= 2, got " +
                          std::to_string(s.width_cells));
  }
  if (s.height_cells < 2) {
    throw ValidationError("scenario.height_cells must be >= 2, got " +
                          std::to_string(s.height_cells));
  }
  if (!(s.cell_size_m > 0)) {
    throw ValidationError("scenario.cell_size_m must be > 0");
  }
  if (!s.in_bounds(s.start)) {
    throw ValidationError("scenario.start " + coord_str(s.start) + " is outside the grid");
  }
  if (!s.in_bounds(s.goal)) {
    throw ValidationError("scenario.goal " + coord_str(s.goal) + " is outside the grid");
  }
  if (s.start == s.goal) {
    throw ValidationError("scenario.start and scenario.goal must differ");
  }
  for (std::size_t i = 0; i < s.base_stations.size(); ++i) {
    if (!s.in_bounds(s.base_stations[i].cell)) {
      throw ValidationError("scenario.base_stations[" + std::to_string(i) + "] " +
                            coord_str(s.base_stations[i].cell) + " is outside the grid");
    }
  }
  if (s.coverage_radius_m < 0) {
    throw ValidationError("scenario.coverage_radius_m must be >= 0");
  }
  if (s.coverage_ceiling_m < 0) {
    throw ValidationError("scenario.coverage_ceiling_m must be >= 0");
  }
}

int CoverageGrid::reliable_count() const {
  return std::accumulate(mask_.begin(), mask_.end(), 0,
                         [](int acc, std::uint8_t v) { return acc + (v != 0); });
}

CoverageGrid build_coverage(const Scenario& s) {
  validate(s);
  CoverageGrid grid(s.width_cells, s.height_cells);
  if (s.altitude_m > s.coverage_ceiling_m || s.base_stations.empty()) return grid;

  const int w = s.width_cells;
  const int h = s.height_cells;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (cell_reliable(s, x, y)) grid.set({x, y}, true);
    }
  }
  return grid;
}

CoverageGrid build_coverage_serial(const Scenario& s) {
  validate(s);
  CoverageGrid grid(s.width_cells, s.height_cells);
  if (s.altitude_m > s.coverage_ceiling_m || s.base_stations.empty()) return grid;

  for (int y = 0; y < s.height_cells; ++y) {
    for (int x = 0; x < s.width_cells; ++x) {
      if (cell_reliable(s, x, y)) grid.set({x, y}, true);
    }
  }
  return grid;
}

namespace {

int require_int(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("scenario: missing key \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError("scenario: \"" + key + "\" must be an integer");
  return v.get<int>();
}

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("scenario: missing key \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) throw ParseError("scenario: \"" + key + "\" must be a number");
  return v.get<double>();
}

CellCoord parse_coord(const json& j, const std::string& context) {
  if (!j.is_object()) throw ParseError("scenario: " + context + " must be an object");
  for (const auto& item : j.items()) {
    if (item.key() != "x" && item.key() != "y") {
      throw ParseError("scenario: unknown key \"" + item.key() + "\" in " + context);
    }
  }
  return {require_int(j, "x"), require_int(j, "y")};
}

ordered_json coord_json(CellCoord c) {
  ordered_json j;
  j["x"] = c.x;
  j["y"] = c.y;
  return j;
}

constexpr const char* kScenarioKeys[] = {
    "width_cells",  "height_cells",      "cell_size_m",
    "altitude_m",   "coverage_radius_m", "coverage_ceiling_m",
    "start",        "goal",              "base_stations",
};

}  // namespace

Scenario load_scenario(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario: document root must be an object");

  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* key : kScenarioKeys) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError("scenario: unknown key \"" + item.key() + "\"");
  }

  Scenario s;
  s.width_cells = require_int(doc, "width_cells");
  s.height_cells = require_int(doc, "height_cells");
  s.cell_size_m = require_number(doc, "cell_size_m");
  s.altitude_m = require_number(doc, "altitude_m");
  s.coverage_radius_m = require_number(doc, "coverage_radius_m");
  s.coverage_ceiling_m = require_number(doc, "coverage_ceiling_m");
  if (!doc.contains("start")) throw ParseError("scenario: missing key \"start\"");
  if (!doc.contains("goal")) throw ParseError("scenario: missing key \"goal\"");
  s.start = parse_coord(doc.at("start"), "\"start\"");
  s.goal = parse_coord(doc.at("goal"), "\"goal\"");
  if (!doc.contains("base_stations")) throw ParseError("scenario: missing key \"base_stations\"");
  const json& stations = doc.at("base_stations");
  if (!stations.is_array()) throw ParseError("scenario: \"base_stations\" must be a list");
  for (std::size_t i = 0; i < stations.size(); ++i) {
    s.base_stations.push_back(
        {parse_coord(stations.at(i), "\"base_stations[" + std::to_string(i) + "]\"")});
  }

  validate(s);
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file: " + path);
  return load_scenario(in);
}

std::string save_scenario(const Scenario& s) {
  ordered_json doc;
  doc["width_cells"] = s.width_cells;
  doc["height_cells"] = s.height_cells;
  doc["cell_size_m"] = s.cell_size_m;
  doc["altitude_m"] = s.altitude_m;
  doc["coverage_radius_m"] = s.coverage_radius_m;
  doc["coverage_ceiling_m"] = s.coverage_ceiling_m;
  doc["start"] = coord_json(s.start);
  doc["goal"] = coord_json(s.goal);
  ordered_json stations = ordered_json::array();
  for (const BaseStation& bs : s.base_stations) stations.push_back(coord_json(bs.cell));
  doc["base_stations"] = std::move(stations);
  return doc.dump(2) + "\n";
}

void save_scenario_file(const Scenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write scenario file: " + path);
  out << save_scenario(s);
  if (!out) throw IoError("failed writing scenario file: " + path);
}

std::string scenario_hash(const Scenario& s) {
  const std::string bytes = save_scenario(s);
  std::uint64_t hash = 14695981039346656037ULL;  // FNV-1a 64 offset basis
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace uavrl
