#pragma once

#include "trimer/hamiltonian.hpp"

namespace trimer {

// CODATA 2018, 8 significant digits.
/// hc/k_B in K cm: 1 cm^-1 corresponds to 1.4387769 K.
inline constexpr double kHcOverKb = 1.4387769;
/// mu_B/k_B in K/T.
inline constexpr double kMuBOverKb = 0.67171382;
/// mu_B/(hc) in cm^-1/T, derived from the two constants above.
inline constexpr double kMuBOverHc = kMuBOverKb / kHcOverKb;

/// Laboratory description of a compound. Exchange constants are given as
/// wavenumbers ("J = 90.3 cm^-1" means J/(hc) = 90.3 cm^-1).
struct PhysicalParams {
  double j_wavenumber = 0.0;
  double j1_wavenumber = 0.0;
  double d_over_j = 0.0;
  /// Composite g = (2 g_Ni + g_Cu)/3; must be supplied.
  double g_factor = 0.0;
  double field_tesla = 0.0;
  double temperature_kelvin = 0.0;

  void validate() const;
};

struct ModelPoint {
  ModelParams params;
  double kT_over_J = 0.0;
};

double wavenumber_to_kelvin(double wavenumber);
double kelvin_to_wavenumber(double kelvin);

/// J in kelvin for the compound.
double exchange_kelvin(const PhysicalParams& phys);

/// Dimensionless couplings (J = 1) and k_B T / J.
ModelPoint to_model_units(const PhysicalParams& phys);

/// Same conversion carried out with energies in cm^-1 instead of kelvin.
ModelPoint to_model_units_wavenumber_path(const PhysicalParams& phys);

/// Inverse of to_model_units for a compound with the given J and g.
PhysicalParams from_model_units(const ModelPoint& point, double j_wavenumber, double g_factor);

/// h/J for a field in tesla, and the inverse.
double field_to_h_over_j(double tesla, const PhysicalParams& phys);
double h_over_j_to_field(double h_over_j, const PhysicalParams& phys);

}  // namespace trimer
