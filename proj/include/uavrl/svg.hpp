#pragma once

#include <span>
#include <string>

#include "uavrl/metrics.hpp"

namespace uavrl {

/// A path to draw on the map, with its stroke color and legend label.
struct SvgPathSpec {
  const PathResult* path = nullptr;
  std::string color = "#1d4ed8";
  std::string label;
};

struct SvgOptions {
  int cell_px = 24;
  /// Also draw the analytic coverage circles (radius coverage_radius_m)
  /// around each base station, on top of the shaded reliable cells.
  bool analytic_circles = false;
};

/// Renders the grid with reliable cells shaded, base-station markers,
/// start/goal markers and the given path polylines. Output bytes are
/// deterministic for identical inputs.
std::string render_map_svg(const Scenario& scenario, const CoverageGrid& coverage,
                           std::span<const SvgPathSpec> paths, const SvgOptions& options = {});

}  // namespace uavrl
