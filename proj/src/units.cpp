#include "trimer/units.hpp"

#include <cmath>
#include <stdexcept>

namespace trimer {

void PhysicalParams::validate() const {
  if (!(j_wavenumber > 0.0) || !std::isfinite(j_wavenumber)) {
    throw std::invalid_argument("compound: J must be a positive wavenumber");
  }
  if (!(g_factor > 0.0) || !std::isfinite(g_factor)) {
    throw std::invalid_argument("compound: g factor must be positive");
  }
  if (!std::isfinite(j1_wavenumber) || !std::isfinite(d_over_j) || !std::isfinite(field_tesla) ||
      !std::isfinite(temperature_kelvin)) {
    throw std::invalid_argument("compound: parameters must be finite");
  }
  if (temperature_kelvin < 0.0) throw std::invalid_argument("compound: temperature must be >= 0");
}

double wavenumber_to_kelvin(double wavenumber) { return wavenumber * kHcOverKb; }
double kelvin_to_wavenumber(double kelvin) { return kelvin / kHcOverKb; }

double exchange_kelvin(const PhysicalParams& phys) { return wavenumber_to_kelvin(phys.j_wavenumber); }

double field_to_h_over_j(double tesla, const PhysicalParams& phys) {
  return phys.g_factor * kMuBOverKb * tesla / exchange_kelvin(phys);
}

double h_over_j_to_field(double h_over_j, const PhysicalParams& phys) {
  return h_over_j * exchange_kelvin(phys) / (phys.g_factor * kMuBOverKb);
}

ModelPoint to_model_units(const PhysicalParams& phys) {
  phys.validate();
  const double j_kelvin = exchange_kelvin(phys);
  ModelPoint out;
  out.params.J = 1.0;
  out.params.J1 = wavenumber_to_kelvin(phys.j1_wavenumber) / j_kelvin;
  out.params.D = phys.d_over_j;
  out.params.h = field_to_h_over_j(phys.field_tesla, phys);
  out.kT_over_J = phys.temperature_kelvin / j_kelvin;
  return out;
}

ModelPoint to_model_units_wavenumber_path(const PhysicalParams& phys) {
  phys.validate();
  ModelPoint out;
  out.params.J = 1.0;
  out.params.J1 = phys.j1_wavenumber / phys.j_wavenumber;
  out.params.D = phys.d_over_j;
  out.params.h = phys.g_factor * kMuBOverHc * phys.field_tesla / phys.j_wavenumber;
  out.kT_over_J = kelvin_to_wavenumber(phys.temperature_kelvin) / phys.j_wavenumber;
  return out;
}

PhysicalParams from_model_units(const ModelPoint& point, double j_wavenumber, double g_factor) {
  PhysicalParams phys;
  phys.j_wavenumber = j_wavenumber;
  phys.g_factor = g_factor;
  phys.validate();
  if (point.params.J != 1.0) throw std::invalid_argument("from_model_units: expects J = 1 model units");
  const double j_kelvin = exchange_kelvin(phys);
  phys.j1_wavenumber = point.params.J1 * j_wavenumber;
  phys.d_over_j = point.params.D;
  phys.field_tesla = h_over_j_to_field(point.params.h, phys);
  phys.temperature_kelvin = point.kT_over_J * j_kelvin;
  return phys;
}

}  // namespace trimer
