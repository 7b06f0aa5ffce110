#pragma once

#include <vector>

#include "trimer/hamiltonian.hpp"

namespace trimer {

/// 18x18 density operator. temperature is k_B T / J; 0 marks a ground-state
/// (zero-temperature) construction.
struct DensityMatrix {
  Operator matrix;
  double temperature = 0.0;
  /// Number of levels with nonzero weight at T = 0 (1 for a pure state).
  int rank = 1;
  /// The degenerate ground manifold spans more than one level family
  /// (a phase boundary / level crossing).
  bool level_crossing = false;
};

/// Normalized Boltzmann weights exp(-(e_i - e_min)/kT) / Z.
std::vector<double> boltzmann_weights(const Spectrum& s, double kT);

/// rho = sum_i w_i |psi_i><psi_i| with Boltzmann weights. Rejects kT <= 0 and
/// incomplete spectra.
DensityMatrix thermal_density_matrix(const Spectrum& s, double kT);

/// Equal-weight mixture over every level within degeneracy_tol of the ground
/// energy.
DensityMatrix ground_state_density_matrix(const Spectrum& s, double degeneracy_tol = 1e-9);

/// |v><v| / <v|v>.
DensityMatrix pure_density_matrix(const StateVector& v);

}  // namespace trimer
