#include <cmath>

#include "doctest.h"
#include "trimer/config.hpp"
#include "trimer/units.hpp"

using namespace trimer;

namespace {

PhysicalParams nicuni() {
  PhysicalParams p;
  p.j_wavenumber = 90.3;
  p.j1_wavenumber = 0.0;
  p.d_over_j = 0.1;
  p.g_factor = 2.15;
  p.field_tesla = 50.0;
  p.temperature_kelvin = 40.0;
  return p;
}

}  // namespace

TEST_CASE("wavenumber to kelvin") {
  CHECK(wavenumber_to_kelvin(90.3) == doctest::Approx(129.92155407).epsilon(1e-10));
  CHECK(kelvin_to_wavenumber(wavenumber_to_kelvin(12.5)) == doctest::Approx(12.5).epsilon(1e-15));
  CHECK(exchange_kelvin(nicuni()) == doctest::Approx(129.92155407).epsilon(1e-10));
}

TEST_CASE("the kelvin and wavenumber paths agree") {
  const ModelPoint a = to_model_units(nicuni());
  const ModelPoint b = to_model_units_wavenumber_path(nicuni());
  CHECK(a.params.h == doctest::Approx(b.params.h).epsilon(1e-12));
  CHECK(a.kT_over_J == doctest::Approx(b.kT_over_J).epsilon(1e-12));
  CHECK(a.params.D == doctest::Approx(0.1));
  CHECK(a.params.J == 1.0);
  // h/J = g mu_B B / J
  CHECK(a.params.h == doctest::Approx(2.15 * kMuBOverKb * 50.0 / 129.92155407).epsilon(1e-9));
  CHECK(a.kT_over_J == doctest::Approx(40.0 / 129.92155407).epsilon(1e-9));
}

TEST_CASE("round trip through model units") {
  const PhysicalParams in = nicuni();
  const PhysicalParams out = from_model_units(to_model_units(in), in.j_wavenumber, in.g_factor);
  CHECK(out.field_tesla == doctest::Approx(in.field_tesla).epsilon(1e-12));
  CHECK(out.temperature_kelvin == doctest::Approx(in.temperature_kelvin).epsilon(1e-12));
  CHECK(out.d_over_j == doctest::Approx(in.d_over_j).epsilon(1e-12));
  CHECK(h_over_j_to_field(field_to_h_over_j(3.0, in), in) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("physical parameters are validated") {
  PhysicalParams p = nicuni();
  p.g_factor = 0.0;
  CHECK_THROWS_AS(to_model_units(p), std::invalid_argument);
  p = nicuni();
  p.j_wavenumber = -1.0;
  CHECK_THROWS_AS(to_model_units(p), std::invalid_argument);
}

TEST_CASE("INI configuration") {
  const RunConfig c = config_from_ini(parse_ini(
      "# NiCuNi\n[compound]\nj_wavenumber = 90.3\nj1_wavenumber = 0\nd_over_j = -0.1 ; easy axis\ng = 2.2\n"
      "[model]\nj1 = 0.5\n"));
  REQUIRE(c.compound.has_value());
  CHECK(c.compound->j_wavenumber == 90.3);
  CHECK(c.compound->d_over_j == -0.1);
  CHECK(c.compound->g_factor == 2.2);
  REQUIRE(c.j1.has_value());
  CHECK(*c.j1 == 0.5);
  CHECK_FALSE(c.d.has_value());

  CHECK_THROWS_AS(config_from_ini(parse_ini("[compound]\nj_wavenumber = 90.3\n")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_ini(parse_ini("[model]\nj2 = 1\n")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_ini(parse_ini("[model]\nj1 = abc\n")), std::invalid_argument);
  CHECK_THROWS_AS(parse_ini("[model\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ini("novalue\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/trimer.ini"), std::runtime_error);
}
