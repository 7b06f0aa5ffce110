#include <cmath>
#include <cstring>
#include <filesystem>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "doctest.h"
#include "trimer/contours.hpp"
#include "trimer/export.hpp"
#include "trimer/scans.hpp"

using namespace trimer;

namespace {

GridScan radial_field(int n) {
  GridScan s;
  s.x = {"x", -1.0, 1.0, n};
  s.y = {"y", -1.0, 1.0, n};
  s.values.resize(static_cast<std::size_t>(n * n));
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) s.values[static_cast<std::size_t>(iy * n + ix)] = std::hypot(s.x.value(ix), s.y.value(iy));
  return s;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("zero-temperature scan layout and values") {
  const GridScan s = scan_gtn_zero_T({"", -3.0, 3.0, 7}, {"", 0.0, 6.0, 5}, 0.0);
  CHECK(s.values.size() == 35);
  CHECK(s.x.name == "D/J");
  CHECK(s.y.name == "h/J");
  for (double v : s.values) {
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
  }
  // Saturated row.
  for (int ix = 0; ix < 7; ++ix) CHECK(s.at(ix, 4) == 0.0);
  CHECK(s.metadata.at("zero_field_offset").get<double>() == 1e-9);
  CHECK_FALSE(s.metadata.contains("timestamp"));
}

TEST_CASE("scans are bit-identical across thread counts") {
  ScanOptions one, many;
  many.threads = 4;
  const GridScan a = scan_gtn_zero_T({"", -3.0, 3.0, 13}, {"", 0.0, 6.0, 11}, 0.5, one);
  const GridScan b = scan_gtn_zero_T({"", -3.0, 3.0, 13}, {"", 0.0, 6.0, 11}, 0.5, many);
  CHECK(std::memcmp(a.values.data(), b.values.data(), a.values.size() * sizeof(double)) == 0);
  ModelParams p;
  p.J1 = 1.5;
  p.D = 0.2;
  const GridScan c = scan_thermal({"", 0.0, 2.0, 9}, {"", 0.05, 2.0, 9}, p, one);
  const GridScan d = scan_thermal({"", 0.0, 2.0, 9}, {"", 0.05, 2.0, 9}, p, many);
  CHECK(std::memcmp(c.values.data(), d.values.data(), c.values.size() * sizeof(double)) == 0);
  CHECK(to_csv(c) == to_csv(d));
}

TEST_CASE("thermal scan rejects non-positive temperatures") {
  CHECK_THROWS_AS(scan_thermal({"", 0.0, 1.0, 3}, {"", 0.0, 1.0, 3}, ModelParams{}), std::invalid_argument);
  CHECK_THROWS_AS(scan_gtn_zero_T({"", 0.0, 0.0, 3}, {"", 0.0, 1.0, 3}, 0.0), std::invalid_argument);
}

TEST_CASE("CSV has a header and one row per cell") {
  const GridScan s = scan_gtn_zero_T({"", -1.0, 1.0, 3}, {"", 0.0, 1.0, 2}, 0.0);
  const std::string csv = to_csv(s);
  CHECK(csv.rfind("# D/J, h/J, gtn\n", 0) == 0);
  CHECK(count(csv, "\n") == 7);
}

TEST_CASE("JSON round trip is exact") {
  ScanOptions opt;
  opt.timestamp = "2026-01-01T00:00:00Z";
  const GridScan s = scan_gtn_zero_T({"", -3.0, 3.0, 9}, {"", 0.0, 6.0, 7}, 0.3, opt);
  const GridScan back = grid_scan_from_json(nlohmann::json::parse(to_json(s).dump()));
  REQUIRE(back.values.size() == s.values.size());
  CHECK(std::memcmp(back.values.data(), s.values.data(), s.values.size() * sizeof(double)) == 0);
  CHECK(back.x.count == 9);
  CHECK(back.metadata.at("timestamp") == "2026-01-01T00:00:00Z");
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("contours of a radial field") {
  const GridScan s = radial_field(81);
  const double iso[] = {0.5, 5.0};
  const ContourSet c = extract_contours(s, iso);
  REQUIRE(c.levels.size() == 2);
  REQUIRE(c.levels[0].polylines.size() == 1);
  const Polyline& ring = c.levels[0].polylines[0];
  CHECK(ring.front() == ring.back());
  for (const auto& p : ring) CHECK(std::hypot(p.x, p.y) == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(c.levels[1].polylines.empty());
  CHECK(c.polyline_count() == 1);
}

TEST_CASE("a constant field equal to the isovalue has no contours") {
  GridScan s = radial_field(5);
  std::fill(s.values.begin(), s.values.end(), 0.3);
  const double iso[] = {0.3};
  CHECK(extract_contours(s, iso).polyline_count() == 0);
}

TEST_CASE("segments chain into polylines") {
  const Point2 a{0, 0}, b{1, 0}, c{1, 1}, d{5, 5}, e{6, 5};
  const auto lines = chain_segments({{b, c}, {d, e}, {a, b}});
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].size() == 3);
  CHECK(lines[0].front() == a);
  CHECK(lines[0].back() == c);
}

TEST_CASE("SVG output is well-formed with one path per polyline") {
  const GridScan s = radial_field(41);
  const double iso[] = {0.3, 0.6, 0.9};
  const ContourSet c = extract_contours(s, iso);
  SvgOptions opt;
  opt.title = "radial <test> & co";
  const std::string svg = to_svg(s, c, opt);
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  CHECK_NOTHROW(boost::property_tree::read_xml(in, tree));
  CHECK(tree.count("svg") == 1);
  CHECK(count(svg, "<path") == c.polyline_count());
  CHECK(count(svg, "<path") == 3);
  CHECK(svg.find("radial &lt;test&gt; &amp; co") != std::string::npos);
}

TEST_CASE("viridis endpoints") {
  CHECK(viridis(0.0) == std::array<int, 3>{68, 1, 84});
  CHECK(viridis(1.0) == std::array<int, 3>{253, 231, 37});
  CHECK(viridis(-1.0) == viridis(0.0));
}

TEST_CASE("phase map exports") {
  ModelParams fixed;
  const PhaseMap map = scan_phases({Axis::D, -3.0, 3.0, 9}, {Axis::h, 0.0, 6.0, 9}, fixed);
  const std::string csv = phase_map_to_csv(map);
  CHECK(csv.rfind("# D/J, h/J, phase\n", 0) == 0);
  CHECK(count(csv, "\n") == 82);
  CHECK(csv.find("\"|5/2,5/2>\"") != std::string::npos);
  const std::string b = boundaries_to_csv(map);
  CHECK(b.rfind("# boundary, D/J, h/J, phase_a, phase_b\n", 0) == 0);
  const auto j = phase_map_to_json(map);
  CHECK(j.at("cells").size() == 81);
}

TEST_CASE("write errors name the path") {
  const std::filesystem::path bad = "/proc/trimer-no-such-dir/out.csv";
  try {
    write_text_file(bad, "x");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(bad.parent_path().string()) != std::string::npos);
  }
  const auto tmp = std::filesystem::temp_directory_path() / "trimer_test_export" / "a.txt";
  write_text_file(tmp, "hello\n");
  CHECK(read_text_file(tmp) == "hello\n");
  std::filesystem::remove_all(tmp.parent_path());
}

TEST_CASE("negativity kinks are found where a PT eigenvalue changes sign") {
  ModelParams p;
  p.J1 = 1.5;
  p.D = 0.2;
  p.h = 0.1;
  const auto kinks = find_negativity_kinks(p, {"kT/J", 0.05, 2.0, 196});
  REQUIRE_FALSE(kinks.empty());
  bool above_one = false;
  for (const auto& k : kinks) {
    if (k.temperature > 1.0) above_one = true;
    CHECK(std::abs(k.slope_above - k.slope_below) > 1e-6);
  }
  CHECK(above_one);
}
