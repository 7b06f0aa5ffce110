#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "trimer/cli.hpp"
#include "trimer/export.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "trimer");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Run r;
  r.code = trimer::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("spectrum prints 18 levels and a residual") {
  const Run r = run({"spectrum", "--j1", "0", "--d", "0", "--h", "0"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 2 + 18 + 2);
  CHECK(r.out.find("max residual = ") != std::string::npos);
  const Run j = run({"spectrum", "--d", "0.5", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("levels").size() == 18);
  CHECK(doc.at("max_residual").get<double>() < 1e-9);
}

TEST_CASE("validate reports PASS with the seed") {
  const Run r = run({"validate", "--points", "200", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
  CHECK(r.out.find("seed 7") != std::string::npos);
  CHECK(run({"validate", "--points", "50", "--seed", "7"}).out.substr(0, 60) ==
        run({"validate", "--points", "50", "--seed", "7"}).out.substr(0, 60));
}

TEST_CASE("find-max locates the |3/2,3/2>^II maximum") {
  const Run r = run({"find-max", "--phase", "3/2,3/2,II", "--axis", "d", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("location").get<double>() == doctest::Approx(2.21).epsilon(0.01));
  CHECK(doc.at("value").get<double>() == doctest::Approx(0.4714).epsilon(1e-3));
}

TEST_CASE("negativity subcommand") {
  const Run r = run({"negativity", "--j1", "0.5", "--d", "-0.5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("gtn").get<double>() == doctest::Approx(0.770839).epsilon(1e-5));
  const Run t = run({"negativity", "--j1", "1.5", "--d", "0.2", "--h", "0.1", "--kt", "1.0"});
  CHECK(t.code == 0);
  CHECK(t.out.find("gTN       = 0.1167042") != std::string::npos);
}

TEST_CASE("config values are overridden by flags") {
  const auto dir = std::filesystem::temp_directory_path() / "trimer_cli_test";
  trimer::write_text_file(dir / "run.ini", "[model]\nj1 = 0.5\nd = -0.5\n");
  const Run a = run({"negativity", "--config", (dir / "run.ini").string()});
  CHECK(a.out.find("J1/J=0.5 D/J=-0.5") != std::string::npos);
  const Run b = run({"negativity", "--config", (dir / "run.ini").string(), "--d", "0.25"});
  CHECK(b.out.find("J1/J=0.5 D/J=0.25") != std::string::npos);
  trimer::write_text_file(dir / "nicuni.ini", "[compound]\nj_wavenumber = 90.3\nd_over_j = 0.1\ng = 2.15\n");
  const Run c = run({"thermal-map", "--compound", (dir / "nicuni.ini").string(), "--axis", "b", "--range", "0:100:3",
                     "--axis", "t", "--range", "5:100:3"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("# B [T], T [K], gtn\n", 0) == 0);
  trimer::write_text_file(dir / "nog.ini", "[compound]\nj_wavenumber = 90.3\n");
  const Run d = run({"thermal-map", "--compound", (dir / "nog.ini").string()});
  CHECK(d.code != 0);
  CHECK(d.err.find("g is required") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("outputs go under the output directory") {
  const auto dir = std::filesystem::temp_directory_path() / "trimer_cli_out";
  std::filesystem::remove_all(dir);
  setenv("TRIMER_OUTPUT_DIR", dir.c_str(), 1);
  const Run r = run({"phase-diagram", "--axis", "d", "--range=-3:3:7", "--axis", "h", "--range", "0:6:7", "--out",
                     "pd.csv"});
  unsetenv("TRIMER_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "pd.csv"));
  CHECK(std::filesystem::exists(dir / "pd_boundaries.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("scan-gtn writes SVG and JSON") {
  const Run svg = run({"scan-gtn", "--axis", "d", "--range=-3:3:9", "--axis", "h", "--range", "0:6:9", "--format",
                       "svg", "--isovalues", "0.1,0.3"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  const Run js = run({"scan-gtn", "--axis", "d", "--range=-3:3:5", "--axis", "h", "--range", "0:6:5", "--format",
                      "json"});
  REQUIRE(js.code == 0);
  CHECK(nlohmann::json::parse(js.out).at("values").size() == 25);
}

TEST_CASE("errors give a nonzero exit and a message") {
  CHECK(run({}).code != 0);
  CHECK(run({"bogus"}).code != 0);
  CHECK(run({"spectrum", "--nope"}).code != 0);
  const Run bad = run({"scan-gtn", "--axis", "d", "--range=1:1:5"});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("empty") != std::string::npos);
  CHECK(run({"scan-gtn", "--axis", "d", "--range", "0:1"}).code != 0);
  CHECK(run({"find-max", "--phase", "9/2,1/2"}).code != 0);
  CHECK(run({"negativity", "--config", "/nonexistent.ini"}).code != 0);
  CHECK(run({"spectrum", "--help"}).code == 0);
}
