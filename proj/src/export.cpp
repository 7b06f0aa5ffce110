#include "trimer/export.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trimer {

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

nlohmann::json axis_json(const GridAxis& a) {
  return {{"name", a.name}, {"min", a.min}, {"max", a.max}, {"count", a.count}};
}

GridAxis axis_from_json(const nlohmann::json& j) {
  GridAxis a;
  a.name = j.at("name").get<std::string>();
  a.min = j.at("min").get<double>();
  a.max = j.at("max").get<double>();
  a.count = j.at("count").get<int>();
  a.validate();
  return a;
}

std::string hex_colour(const std::array<int, 3>& rgb) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string to_csv(const GridScan& scan) {
  std::string out = "# " + scan.x.name + ", " + scan.y.name + ", " + scan.quantity + "\n";
  for (int iy = 0; iy < scan.y.count; ++iy)
    for (int ix = 0; ix < scan.x.count; ++ix)
      out += format_double(scan.x.value(ix)) + "," + format_double(scan.y.value(iy)) + "," +
             format_double(scan.at(ix, iy)) + "\n";
  return out;
}

nlohmann::json to_json(const GridScan& scan) {
  return {{"x", axis_json(scan.x)},
          {"y", axis_json(scan.y)},
          {"quantity", scan.quantity},
          {"values", scan.values},
          {"metadata", scan.metadata}};
}

GridScan grid_scan_from_json(const nlohmann::json& j) {
  GridScan s;
  s.x = axis_from_json(j.at("x"));
  s.y = axis_from_json(j.at("y"));
  s.quantity = j.at("quantity").get<std::string>();
  s.values = j.at("values").get<std::vector<double>>();
  if (s.values.size() != static_cast<std::size_t>(s.x.count) * static_cast<std::size_t>(s.y.count))
    throw std::invalid_argument("grid scan: values size does not match the axes");
  if (j.contains("metadata")) s.metadata = j.at("metadata");
  return s;
}

std::array<int, 3> viridis(double t) {
  static constexpr double kStops[9][3] = {
      {68, 1, 84},    {71, 44, 122},  {59, 81, 139},  {44, 113, 142}, {33, 144, 141},
      {39, 173, 129}, {92, 200, 99},  {170, 220, 50}, {253, 231, 37},
  };
  if (!std::isfinite(t)) t = 0.0;
  t = std::clamp(t, 0.0, 1.0) * 8.0;
  const int i = std::min(static_cast<int>(t), 7);
  const double f = t - i;
  std::array<int, 3> rgb{};
  for (int c = 0; c < 3; ++c)
    rgb[static_cast<std::size_t>(c)] = static_cast<int>(std::lround(kStops[i][c] + f * (kStops[i + 1][c] - kStops[i][c])));
  return rgb;
}

std::string to_svg(const GridScan& scan, const ContourSet& contours, const SvgOptions& opt) {
  const double left = 70, right = 110, top = 40, bottom = 60;
  const double pw = opt.width - left - right, ph = opt.height - top - bottom;
  const int nx = scan.x.count, ny = scan.y.count;

  double vmin = 0.0, vmax = 0.0;
  bool first = true;
  for (double v : scan.values) {
    if (!std::isfinite(v)) continue;
    if (first) vmin = vmax = v;
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
    first = false;
  }
  const double span = vmax > vmin ? vmax - vmin : 1.0;

  auto px = [&](double x) { return left + (x - scan.x.min) / (scan.x.max - scan.x.min) * pw; };
  auto py = [&](double y) { return top + ph - (y - scan.y.min) / (scan.y.max - scan.y.min) * ph; };
  auto f = [](double v) { return format_double(std::round(v * 100.0) / 100.0); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << opt.height
    << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"#ffffff\"/>\n";
  if (!opt.title.empty())
    s << "<text x=\"" << f(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << xml_escape(opt.title) << "</text>\n";

  // Cells are centred on grid points.
  s << "<g id=\"heatmap\" shape-rendering=\"crispEdges\">\n";
  const double cw = pw / (nx - 1), chh = ph / (ny - 1);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const double cx = px(scan.x.value(ix)), cy = py(scan.y.value(iy));
      const double x0 = std::max(left, cx - cw / 2), x1 = std::min(left + pw, cx + cw / 2);
      const double y0 = std::max(top, cy - chh / 2), y1 = std::min(top + ph, cy + chh / 2);
      s << "<rect x=\"" << f(x0) << "\" y=\"" << f(y0) << "\" width=\"" << f(x1 - x0) << "\" height=\"" << f(y1 - y0)
        << "\" fill=\"" << hex_colour(viridis((scan.at(ix, iy) - vmin) / span)) << "\"/>\n";
    }
  }
  s << "</g>\n";

  s << "<g id=\"contours\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"1.5\">\n";
  for (const auto& level : contours.levels) {
    for (const auto& line : level.polylines) {
      s << "<path data-isovalue=\"" << format_double(level.isovalue) << "\" d=\"";
      for (std::size_t i = 0; i < line.size(); ++i)
        s << (i == 0 ? "M" : " L") << f(px(line[i].x)) << ',' << f(py(line[i].y));
      s << "\"/>\n";
    }
  }
  s << "</g>\n";

  s << "<rect x=\"" << f(left) << "\" y=\"" << f(top) << "\" width=\"" << f(pw) << "\" height=\"" << f(ph)
    << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = scan.x.min + (scan.x.max - scan.x.min) * k / 4.0;
    const double yv = scan.y.min + (scan.y.max - scan.y.min) * k / 4.0;
    s << "<text x=\"" << f(px(xv)) << "\" y=\"" << f(top + ph + 18) << "\" text-anchor=\"middle\" font-size=\"11\">"
      << format_double(std::round(xv * 1000.0) / 1000.0) << "</text>\n";
    s << "<text x=\"" << f(left - 6) << "\" y=\"" << f(py(yv) + 4) << "\" text-anchor=\"end\" font-size=\"11\">"
      << format_double(std::round(yv * 1000.0) / 1000.0) << "</text>\n";
  }
  s << "<text x=\"" << f(left + pw / 2) << "\" y=\"" << f(opt.height - 16.0)
    << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(scan.x.name) << "</text>\n";
  s << "<text x=\"18\" y=\"" << f(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
    << f(top + ph / 2) << ")\">" << xml_escape(scan.y.name) << "</text>\n";

  const double bx = left + pw + 25, bw = 18;
  s << "<g id=\"colorbar\">\n";
  const int steps = 64;
  for (int k = 0; k < steps; ++k) {
    const double y0 = top + ph * (steps - 1 - k) / steps;
    s << "<rect x=\"" << f(bx) << "\" y=\"" << f(y0) << "\" width=\"" << f(bw) << "\" height=\"" << f(ph / steps + 0.5)
      << "\" fill=\"" << hex_colour(viridis((k + 0.5) / steps)) << "\"/>\n";
  }
  s << "<text x=\"" << f(bx + bw + 4) << "\" y=\"" << f(top + ph) << "\" font-size=\"11\">"
    << format_double(std::round(vmin * 1e4) / 1e4) << "</text>\n";
  s << "<text x=\"" << f(bx + bw + 4) << "\" y=\"" << f(top + 8) << "\" font-size=\"11\">"
    << format_double(std::round(vmax * 1e4) / 1e4) << "</text>\n";
  s << "<text x=\"" << f(bx) << "\" y=\"" << f(top - 8) << "\" font-size=\"12\">" << xml_escape(scan.quantity)
    << "</text>\n";
  s << "</g>\n</svg>\n";
  return s.str();
}

std::string phase_map_to_csv(const PhaseMap& map) {
  std::string out = std::string("# ") + axis_name(map.x.axis) + ", " + axis_name(map.y.axis) + ", phase\n";
  for (const auto& c : map.cells)
    out += format_double(c.x) + "," + format_double(c.y) + "," + csv_quote(c.label.display()) + "\n";
  return out;
}

nlohmann::json phase_map_to_json(const PhaseMap& map) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : map.cells)
    cells.push_back({{"x", c.x}, {"y", c.y}, {"phase", c.label.display()}, {"boundary", c.boundary},
                     {"character", c.character}});
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& b : map.boundaries) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : b.points) pts.push_back({p.x, p.y});
    lines.push_back({{"phases", {b.first.display(), b.second.display()}}, {"points", pts}});
  }
  return {{"x", {{"name", axis_name(map.x.axis)}, {"min", map.x.min}, {"max", map.x.max}, {"count", map.x.count}}},
          {"y", {{"name", axis_name(map.y.axis)}, {"min", map.y.min}, {"max", map.y.max}, {"count", map.y.count}}},
          {"fixed", {{"J", map.fixed.J}, {"J1", map.fixed.J1}, {"D", map.fixed.D}, {"h", map.fixed.h}}},
          {"cells", cells},
          {"boundaries", lines}};
}

std::string boundaries_to_csv(const PhaseMap& map) {
  std::string out = std::string("# boundary, ") + axis_name(map.x.axis) + ", " + axis_name(map.y.axis) +
                    ", phase_a, phase_b\n";
  for (std::size_t i = 0; i < map.boundaries.size(); ++i) {
    const auto& b = map.boundaries[i];
    for (const auto& p : b.points)
      out += std::to_string(i) + "," + format_double(p.x) + "," + format_double(p.y) + "," +
             csv_quote(b.first.display()) + "," + csv_quote(b.second.display()) + "\n";
  }
  return out;
}

std::string contours_to_csv(const ContourSet& contours) {
  std::string out = "# isovalue, polyline, x, y\n";
  std::size_t id = 0;
  for (const auto& level : contours.levels) {
    for (const auto& line : level.polylines) {
      for (const auto& p : line)
        out += format_double(level.isovalue) + "," + std::to_string(id) + "," + format_double(p.x) + "," +
               format_double(p.y) + "\n";
      ++id;
    }
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing: " + std::strerror(errno));
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("cannot write " + path.string() + ": " + std::strerror(errno));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + ": " + std::strerror(errno));
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace trimer
