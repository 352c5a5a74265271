#include "uavrl/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "uavrl/errors.hpp"

namespace uavrl {

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_map_svg(const Scenario& scenario, const CoverageGrid& coverage,
                           std::span<const SvgPathSpec> paths, const SvgOptions& options) {
  validate(scenario);
  if (coverage.width() != scenario.width_cells || coverage.height() != scenario.height_cells) {
    throw ValidationError("svg: coverage grid does not match the scenario");
  }
  if (options.cell_px <= 0) throw ValidationError("svg: cell_px must be positive");

  const double cell = options.cell_px;
  const double pad = 10.0;
  const double grid_w = scenario.width_cells * cell;
  const double grid_h = scenario.height_cells * cell;

  int legend_entries = 4;  // reliable zone, base station, start, goal
  for (const SvgPathSpec& p : paths) {
    if (p.path == nullptr) throw ValidationError("svg: null path");
    if (!p.label.empty()) ++legend_entries;
  }
  const double legend_h = 10.0 + 18.0 * legend_entries;
  const double total_w = std::max(grid_w + 2 * pad, 280.0);
  const double total_h = grid_h + 2 * pad + legend_h;

  const auto cx = [&](int x) { return pad + (x + 0.5) * cell; };
  const auto cy = [&](int y) { return pad + (y + 0.5) * cell; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(total_w) + "\" height=\"" +
         px(total_h) + "\" viewBox=\"0 0 " + px(total_w) + " " + px(total_h) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + px(total_w) + "\" height=\"" + px(total_h) +
         "\" fill=\"#ffffff\"/>\n";

  // Reliable cells, row-major so identical inputs yield identical bytes.
  for (int y = 0; y < scenario.height_cells; ++y) {
    for (int x = 0; x < scenario.width_cells; ++x) {
      if (!coverage.reliable({x, y})) continue;
      out += "<rect x=\"" + px(pad + x * cell) + "\" y=\"" + px(pad + y * cell) +
             "\" width=\"" + px(cell) + "\" height=\"" + px(cell) + "\" fill=\"#bfdbfe\"/>\n";
    }
  }

  // Grid lines.
  for (int x = 0; x <= scenario.width_cells; ++x) {
    out += "<line x1=\"" + px(pad + x * cell) + "\" y1=\"" + px(pad) + "\" x2=\"" +
           px(pad + x * cell) + "\" y2=\"" + px(pad + grid_h) +
           "\" stroke=\"#d1d5db\" stroke-width=\"1\"/>\n";
  }
  for (int y = 0; y <= scenario.height_cells; ++y) {
    out += "<line x1=\"" + px(pad) + "\" y1=\"" + px(pad + y * cell) + "\" x2=\"" +
           px(pad + grid_w) + "\" y2=\"" + px(pad + y * cell) +
           "\" stroke=\"#d1d5db\" stroke-width=\"1\"/>\n";
  }

  // Analytic coverage circles (center-to-center radius, drawn to scale).
  if (options.analytic_circles) {
    const double r = scenario.coverage_radius_m / scenario.cell_size_m * cell;
    for (const BaseStation& bs : scenario.base_stations) {
      out += "<circle cx=\"" + px(cx(bs.cell.x)) + "\" cy=\"" + px(cy(bs.cell.y)) + "\" r=\"" +
             px(r) + "\" fill=\"none\" stroke=\"#3b82f6\" stroke-width=\"1\" "
             "stroke-dasharray=\"4 3\"/>\n";
    }
  }

  // Base stations: filled triangles.
  for (const BaseStation& bs : scenario.base_stations) {
    const double x = cx(bs.cell.x);
    const double y = cy(bs.cell.y);
    const double r = cell * 0.3;
    out += "<polygon points=\"" + px(x) + "," + px(y - r) + " " + px(x - r) + "," + px(y + r) +
           " " + px(x + r) + "," + px(y + r) + "\" fill=\"#1e3a8a\"/>\n";
  }

  // Path polylines through cell centers, in the order given (later on top).
  for (const SvgPathSpec& p : paths) {
    if (p.path->cells.empty()) continue;
    out += "<polyline points=\"";
    for (std::size_t i = 0; i < p.path->cells.size(); ++i) {
      if (i > 0) out += ' ';
      out += px(cx(p.path->cells[i].x)) + "," + px(cy(p.path->cells[i].y));
    }
    out += "\" fill=\"none\" stroke=\"" + p.color + "\" stroke-width=\"" +
           px(std::max(2.0, cell / 8.0)) +
           "\" stroke-linecap=\"round\" stroke-linejoin=\"round\" opacity=\"0.85\"/>\n";
  }

  // Start: green circle. Goal: red diamond.
  {
    const double r = cell * 0.28;
    out += "<circle cx=\"" + px(cx(scenario.start.x)) + "\" cy=\"" + px(cy(scenario.start.y)) +
           "\" r=\"" + px(r) + "\" fill=\"#16a34a\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
    const double gx = cx(scenario.goal.x);
    const double gy = cy(scenario.goal.y);
    const double d = cell * 0.34;
    out += "<polygon points=\"" + px(gx) + "," + px(gy - d) + " " + px(gx + d) + "," + px(gy) +
           " " + px(gx) + "," + px(gy + d) + " " + px(gx - d) + "," + px(gy) +
           "\" fill=\"#dc2626\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
  }

  // Legend.
  double ly = grid_h + 2 * pad + 14.0;
  const double lx = pad;
  const auto legend_text = [&](const std::string& label) {
    out += "<text x=\"" + px(lx + 24) + "\" y=\"" + px(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#111827\">" +
           escape_text(label) + "</text>\n";
    ly += 18.0;
  };
  out += "<rect x=\"" + px(lx) + "\" y=\"" + px(ly - 6) +
         "\" width=\"14\" height=\"12\" fill=\"#bfdbfe\"/>\n";
  legend_text("reliable coverage");
  out += "<polygon points=\"" + px(lx + 7) + "," + px(ly - 7) + " " + px(lx) + "," + px(ly + 5) +
         " " + px(lx + 14) + "," + px(ly + 5) + "\" fill=\"#1e3a8a\"/>\n";
  legend_text("base station");
  out += "<circle cx=\"" + px(lx + 7) + "\" cy=\"" + px(ly) +
         "\" r=\"6\" fill=\"#16a34a\"/>\n";
  legend_text("start");
  out += "<polygon points=\"" + px(lx + 7) + "," + px(ly - 7) + " " + px(lx + 14) + "," + px(ly) +
         " " + px(lx + 7) + "," + px(ly + 7) + " " + px(lx) + "," + px(ly) +
         "\" fill=\"#dc2626\"/>\n";
  legend_text("goal");
  for (const SvgPathSpec& p : paths) {
    if (p.label.empty()) continue;
    out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly) + "\" x2=\"" + px(lx + 14) + "\" y2=\"" +
           px(ly) + "\" stroke=\"" + p.color + "\" stroke-width=\"3\"/>\n";
    legend_text(p.label);
  }

  out += "</svg>\n";
  return out;
}

}  // namespace uavrl
