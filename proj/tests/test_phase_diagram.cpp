#include <cmath>
#include <random>

#include "doctest.h"
#include "trimer/phase_diagram.hpp"

using namespace trimer;

namespace {

ModelParams point(double j1, double d, double h) {
  ModelParams p;
  p.J1 = j1;
  p.D = d;
  p.h = h;
  return p;
}

}  // namespace

TEST_CASE("ground phase agrees with the oracle at random points") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 1000; ++k) {
    const ModelParams p = point(u(rng), u(rng), u(rng));
    const GroundPhase g = ground_phase(p);
    const Spectrum oracle = diagonalize_hamiltonian(p);
    CHECK(g.energy == doctest::Approx(oracle.ground_energy()).epsilon(1e-10));
    // The reported level's vector must be an oracle ground state.
    const auto levels = analytic_eigensystem(p);
    const StateVector& v = find_level(levels, g.label).vector;
    const double e = (v.adjoint() * build_hamiltonian(p) * v)(0, 0).real();
    CHECK(e == doctest::Approx(oracle.ground_energy()).epsilon(1e-9));
  }
}

TEST_CASE("saturation and zero-field degeneracy") {
  const GroundPhase sat = ground_phase(point(0.7, 1.0, 20.0));
  CHECK(sat.label.display() == "|5/2,5/2>");
  CHECK_FALSE(sat.boundary);

  const GroundPhase zero = ground_phase(point(1.5, 1.0, 0.0));
  CHECK(zero.label.display() == "|1/2,1/2>^I");
  CHECK(zero.tied.size() == 2);
  CHECK_FALSE(zero.boundary);

  const GroundPhase cross = ground_phase(point(0.25, 0.0, 0.0));
  CHECK(cross.boundary);
}

TEST_CASE("field window of a phase") {
  const auto w = field_window(parse_level_label("3/2,3/2,II"), point(0.0, 2.21, 0.0));
  REQUIRE(w.has_value());
  CHECK(w->first > 2.0);
  CHECK(w->second < 4.0);
  const GroundPhase inside = ground_phase(point(0.0, 2.21, 0.5 * (w->first + w->second)));
  CHECK(inside.label.display() == "|3/2,3/2>^II");
  const auto s = field_window(parse_level_label("5/2,5/2"), point(0.0, 0.0, 0.0));
  REQUIRE(s.has_value());
  CHECK(std::isinf(s->second));
  CHECK_FALSE(field_window(parse_level_label("5/2,1/2"), point(0.0, 0.0, 0.0)).has_value());
}

TEST_CASE("phase map boundaries are bracketed by different phases") {
  AxisRange x{Axis::D, -3.0, 3.0, 25};
  AxisRange y{Axis::h, 0.0, 6.0, 25};
  const PhaseMap map = scan_phases(x, y, point(0.0, 0.0, 0.0));
  REQUIRE(map.cells.size() == 625);
  CHECK(map.cell(24, 24).label.display() == "|5/2,5/2>");
  REQUIRE_FALSE(map.boundary_points.empty());
  for (const auto& bp : map.boundary_points) {
    CHECK_FALSE(bp.first.same_family(bp.second));
    bool along_x = false;
    for (int iy = 0; iy < y.count; ++iy) along_x = along_x || bp.point.y == y.value(iy);
    const double delta = 2e-6;
    ModelParams lo = point(0.0, bp.point.x, bp.point.y), hi = lo;
    if (along_x) {
      lo.D -= delta;
      hi.D += delta;
    } else {
      lo.h -= delta;
      hi.h += delta;
    }
    CHECK(ground_phase(lo).label.same_family(bp.first));
    CHECK(ground_phase(hi).label.same_family(bp.second));
  }
  CHECK_FALSE(map.boundaries.empty());
  for (const auto& b : map.boundaries) CHECK(b.points.size() >= 2);
}

TEST_CASE("phase scans are deterministic across thread counts") {
  AxisRange x{Axis::D, -3.0, 3.0, 31};
  AxisRange y{Axis::J1, 0.0, 3.0, 31};
  const PhaseMap a = scan_phases(x, y, point(0.0, 0.0, 0.0), 1);
  const PhaseMap b = scan_phases(x, y, point(0.0, 0.0, 0.0), 3);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) CHECK(a.cells[i].label == b.cells[i].label);
  REQUIRE(a.boundary_points.size() == b.boundary_points.size());
  for (std::size_t i = 0; i < a.boundary_points.size(); ++i) CHECK(a.boundary_points[i].point == b.boundary_points[i].point);
}

TEST_CASE("axis ranges are validated") {
  CHECK_THROWS_AS(AxisRange({Axis::D, 1.0, 1.0, 5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(AxisRange({Axis::D, 0.0, 1.0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(scan_phases({Axis::D, 0, 1, 3}, {Axis::D, 0, 1, 3}, point(0, 0, 0)), std::invalid_argument);
  CHECK(parse_axis("J1/J") == Axis::J1);
  CHECK_THROWS_AS(parse_axis("q"), std::invalid_argument);
}

TEST_CASE("gTN maximization") {
  const AxisRange d{Axis::D, -3.0, 3.0, 601};
  const MaximumResult m = find_gtn_maximum(parse_level_label("3/2,3/2,II"), d, point(0.0, 0.0, 0.0));
  CHECK(m.value == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-6));
  CHECK(m.location == doctest::Approx(2.2071).epsilon(1e-3));
  REQUIRE(m.window.has_value());

  // |1/2,1/2>^II is never a ground state at J1 = 0.
  CHECK_THROWS_AS(find_gtn_maximum(parse_level_label("1/2,1/2,II"), d, point(0.0, 0.0, 0.0)), std::invalid_argument);

  const MaximumResult mix = find_gtn_maximum(parse_level_label("1/2,1/2,I"), {Axis::D, 0.01, 3.0, 300},
                                             point(1.5, 0.0, 0.0), StateMode::degenerate_mixture);
  CHECK(mix.value == doctest::Approx(0.19947832872638796).epsilon(1e-6));
  CHECK(mix.location_stable);
}
