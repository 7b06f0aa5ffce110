#pragma once

#include <array>
#include <optional>
#include <vector>

#include "trimer/thermal_state.hpp"

namespace trimer {

/// Eigenvalues of the partial transpose below this count as negative.
inline constexpr double kNegativeEigenvalueThreshold = -1e-12;

/// Transposes the indices of `site` only. Rejects non-18x18 input.
Operator partial_transpose(const Operator& rho, Site site);

struct PtEigenvalue {
  double value = 0.0;
  /// Conserved block of the transposed operator: 2 * (M_rest - m_site), where
  /// M_rest is the magnetization of the other two sites. Set only when rho
  /// commutes with S_t^z, so that the block structure survives transposition.
  std::optional<int> block;
};

struct PartitionNegativity {
  Site site = Site::mu;
  double value = 0.0;
  /// Strictly negative eigenvalues, ascending.
  std::vector<double> negative_eigenvalues;
  /// Full spectrum of the partial transpose, ascending.
  std::vector<PtEigenvalue> spectrum;
};

/// N_{site|rest} = sum over |lambda| of the negative eigenvalues of rho^{T_site}.
PartitionNegativity negativity(const Operator& rho, Site site);
inline PartitionNegativity negativity(const DensityMatrix& rho, Site site) {
  return negativity(rho.matrix, site);
}

struct NegativityReport {
  double n_mu = 0.0;  // N_{mu|S1 S2}
  double n_s1 = 0.0;  // N_{S1|mu S2}
  double n_s2 = 0.0;  // N_{S2|mu S1}, computed independently of n_s1
  double gtn = 0.0;   // (n_mu n_s1 n_s2)^(1/3)
  std::array<PartitionNegativity, 3> partitions;
};

NegativityReport gtn(const Operator& rho);
inline NegativityReport gtn(const DensityMatrix& rho) { return gtn(rho.matrix); }

}  // namespace trimer
