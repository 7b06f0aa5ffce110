#pragma once

#include <array>
#include <string>
#include <vector>

#include "trimer/hamiltonian.hpp"

namespace trimer {

/// Closed-form auxiliaries of the trimer spectrum.
///
/// The S_t^z = +-1/2 sector symmetric under S1 <-> S2 is three dimensional;
/// its levels are (6D - J)/6 -+ h/2 + Y_i where Y_i are the roots of
/// Y^3 - 3pY - 2q = 0. Index i = 0, 1, 2 runs over the roots in descending
/// order and labels |5/2,1/2>, |3/2,1/2>^II, |1/2,1/2>^I respectively.
struct TableCoefficients {
  double P1 = 0.0;
  double P2 = 0.0;
  double p = 0.0;
  double q = 0.0;
  double phi = 0.0;
  std::array<double, 3> Y{};
  double a1m = 0.0, a1p = 0.0;
  double a2m = 0.0, a2p = 0.0;
  /// D - J/6 + 2 J1 + Y_i; R_i and T_i are singular where it vanishes.
  std::array<double, 3> denominator{};
  std::array<double, 3> R{};
  std::array<double, 3> T{};
  std::array<double, 3> alpha{};
  std::array<double, 3> beta{};
  std::array<double, 3> gamma{};
  /// False where the R_i/T_i closed form is numerically singular.
  std::array<bool, 3> regular{};
};

/// Roots of Y^3 - 3 p Y - 2 q = 0 in descending order (trigonometric form).
/// Rejects p below -1e-12 (scaled); small negative p is clamped to zero.
std::array<double, 3> cubic_roots(double p, double q);

TableCoefficients table_coefficients(const ModelParams& params);

struct Component {
  std::string name;
  double amplitude = 0.0;
};

struct AnalyticLevel {
  LevelLabel label;
  double energy = 0.0;
  StateVector vector;
  /// Named amplitudes of the closed-form decomposition, e.g. alpha/beta/gamma.
  std::vector<Component> components;
  /// Vector taken from the numerical block solution because the closed form
  /// was singular at this point.
  bool fallback = false;
};

struct LevelEnergy {
  LevelLabel label;
  double energy = 0.0;
};

/// The 18 labeled energies, in a fixed family order (not sorted).
std::vector<LevelEnergy> analytic_energies(const ModelParams& params);

/// The 18 labeled levels with closed-form eigenvectors, in the same order
/// as analytic_energies. Requires J != 0.
std::vector<AnalyticLevel> analytic_eigensystem(const ModelParams& params);

/// The level carrying `label`; throws if absent.
const AnalyticLevel& find_level(const std::vector<AnalyticLevel>& levels, const LevelLabel& label);

/// Labeled spectrum sorted by energy.
Spectrum to_spectrum(const std::vector<AnalyticLevel>& levels);

/// Rotates v so its largest-magnitude entry is real and positive.
void fix_global_phase(StateVector& v);

}  // namespace trimer
