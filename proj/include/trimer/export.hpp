#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "trimer/contours.hpp"
#include "trimer/phase_diagram.hpp"
#include "trimer/scans.hpp"

namespace trimer {

/// Shortest text that reads back to the same double (at most 17 digits).
std::string format_double(double v);

/// Header "# <x name>, <y name>, <quantity>" then one "x,y,value" row per
/// cell, y outer.
std::string to_csv(const GridScan& scan);

/// {"x": axis, "y": axis, "quantity": ..., "values": [...], "metadata": {...}}
/// with values row-major, y outer. Round-trips bit-exactly.
nlohmann::json to_json(const GridScan& scan);
GridScan grid_scan_from_json(const nlohmann::json& j);

struct SvgOptions {
  int width = 640;
  int height = 480;
  std::string title;
};

/// Heat map with a colour bar, axis labels and one <path> per contour
/// polyline (no other <path> elements are emitted).
std::string to_svg(const GridScan& scan, const ContourSet& contours, const SvgOptions& opt = {});

/// Perceptually uniform map of t in [0, 1] to 8-bit RGB.
std::array<int, 3> viridis(double t);

/// "# <x>, <y>, phase" then "x,y,\"|S_t,S_t^z>^b\"" per cell.
std::string phase_map_to_csv(const PhaseMap& map);
/// Cells plus boundary polylines, including the dominant-component character.
nlohmann::json phase_map_to_json(const PhaseMap& map);
/// "# boundary, x, y, phase_a, phase_b" with one row per polyline vertex.
std::string boundaries_to_csv(const PhaseMap& map);

/// "# isovalue, polyline, x, y".
std::string contours_to_csv(const ContourSet& contours);

/// Writes text to path, creating parent directories. Throws
/// std::runtime_error naming the path and the cause.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace trimer
