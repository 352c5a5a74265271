#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace uavrl {

/// Discrete grid position. x is the column (0 = west edge), y is the row
/// (0 = north edge, growing southward, matching row-major storage and SVG).
struct CellCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

struct BaseStation {
  CellCoord cell;  // BS location snapped to a grid cell

  friend bool operator==(const BaseStation&, const BaseStation&) = default;
};

/// Immutable world description: grid geometry, base stations, mission
/// endpoints and the reliable-coverage envelope. Distances are measured
/// between cell centers; the reliable zone around a base station is the
/// closed horizontal disk of coverage_radius_m, available only while the
/// flight altitude stays at or below coverage_ceiling_m.
struct Scenario {
  int width_cells = 0;
  int height_cells = 0;
  double cell_size_m = 250.0;  // length of a cell side
  std::vector<BaseStation> base_stations;
  CellCoord start;
  CellCoord goal;
  double altitude_m = 60.0;
  double coverage_radius_m = 500.0;
  double coverage_ceiling_m = 85.0;

  bool in_bounds(CellCoord c) const {
    return c.x >= 0 && c.x < width_cells && c.y >= 0 && c.y < height_cells;
  }
  int cell_count() const { return width_cells * height_cells; }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ValidationError naming the offending field.
void validate(const Scenario& s);

/// Per-cell reliability mask, row-major. Immutable after construction and
/// safe to share read-only across threads.
class CoverageGrid {
 public:
  CoverageGrid() = default;
  CoverageGrid(int width_cells, int height_cells)
      : width_(width_cells), height_(height_cells),
        mask_(static_cast<std::size_t>(width_cells) * height_cells, 0) {}

  int width() const { return width_; }
  int height() const { return height_; }

  bool reliable(CellCoord c) const { return mask_[index(c)] != 0; }
  void set(CellCoord c, bool value) { mask_[index(c)] = value ? 1 : 0; }

  int reliable_count() const;

  friend bool operator==(const CoverageGrid&, const CoverageGrid&) = default;

 private:
  std::size_t index(CellCoord c) const {
    return static_cast<std::size_t>(c.y) * width_ + c.x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> mask_;  // uint8 rather than vector<bool>: parallel writes per cell
};

/// Builds the reliability mask: a cell is reliable iff the flight altitude is
/// within the coverage ceiling and some base station's cell center lies within
/// the closed coverage radius. OpenMP-parallel over cells; bit-identical to
/// build_coverage_serial for any thread count.
CoverageGrid build_coverage(const Scenario& s);

/// Serial reference for build_coverage, kept for tests and benchmarks.
CoverageGrid build_coverage_serial(const Scenario& s);

/// Scenario file format: a JSON document with exactly the Scenario fields
/// (width_cells, height_cells, cell_size_m, altitude_m, coverage_radius_m,
/// coverage_ceiling_m, start, goal, base_stations). Unknown keys are
/// rejected. save_scenario emits a canonical field ordering so that
/// identical scenarios serialize to identical bytes.
Scenario load_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);
std::string save_scenario(const Scenario& s);
void save_scenario_file(const Scenario& s, const std::string& path);

/// FNV-1a 64-bit fingerprint of the canonical serialization, rendered as
/// "fnv1a64:<16 hex digits>". Used for provenance in manifests and reports.
std::string scenario_hash(const Scenario& s);

}  // namespace uavrl
