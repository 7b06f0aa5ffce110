#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "trimer/phase_diagram.hpp"
#include "trimer/units.hpp"

namespace trimer {

struct GridAxis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  double value(int i) const;
  void validate() const;
};

/// Values on a regular grid, stored row-major with y outer:
/// values[iy * x.count + ix].
struct GridScan {
  GridAxis x;
  GridAxis y;
  std::string quantity = "gtn";
  std::vector<double> values;
  nlohmann::json metadata = nlohmann::json::object();

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy * x.count + ix)]; }
};

struct ScanOptions {
  int threads = 1;
  Quantity quantity = Quantity::gtn;
  /// h = 0 exactly is replaced by this value so the ground state is the
  /// h -> 0+ member; 0 disables the shift.
  double zero_field_offset = 1e-9;
  /// Stored in metadata only when set, so outputs stay byte-identical.
  std::optional<std::string> timestamp;
};

/// Ground-state entanglement over (D/J, h/J) at T = 0: x = D/J, y = h/J.
/// Each cell uses the pure ground eigenvector; on a level crossing the member
/// with the largest S_t^z is taken.
GridScan scan_gtn_zero_T(const GridAxis& d_axis, const GridAxis& h_axis, double j1, const ScanOptions& opt = {});

/// Thermal entanglement over (h/J, k_B T/J) at fixed J1/J and D/J:
/// x = h/J, y = kT/J.
GridScan scan_thermal(const GridAxis& h_axis, const GridAxis& t_axis, const ModelParams& fixed,
                      const ScanOptions& opt = {});

/// Thermal entanglement of a compound in laboratory units: x = B [T],
/// y = T [K]. Field and temperature of `compound` are ignored.
GridScan scan_thermal_compound(const GridAxis& field_axis, const GridAxis& temperature_axis,
                               const PhysicalParams& compound, const ScanOptions& opt = {});

/// Temperature at which a partial-transpose eigenvalue changes sign while
/// gTN is still positive, and the one-sided slopes of gTN there.
struct NegativityKink {
  double temperature = 0.0;
  Site site = Site::mu;
  double slope_below = 0.0;
  double slope_above = 0.0;
};

/// Scans kT/J over t_axis at fixed couplings and refines every sign change of
/// a PT eigenvalue (per partition and conserved block) by bisection.
std::vector<NegativityKink> find_negativity_kinks(const ModelParams& p, const GridAxis& t_axis);

}  // namespace trimer
