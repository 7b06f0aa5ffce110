#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trimer/analytic_spectrum.hpp"
#include "trimer/geometry.hpp"
#include "trimer/negativity.hpp"

namespace trimer {

enum class Axis { h, D, J1 };

/// Accepts "h", "d", "j1" (case-insensitive) and "h/J", "D/J", "J1/J".
Axis parse_axis(const std::string& text);
const char* axis_name(Axis axis);
void set_axis(ModelParams& p, Axis axis, double value);

struct AxisRange {
  Axis axis = Axis::D;
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  double value(int i) const;
  /// Rejects count < 2 and min == max.
  void validate() const;
};

enum class Quantity { gtn, n_mu, n_s1 };
Quantity parse_quantity(const std::string& text);
const char* quantity_name(Quantity q);
double select(const NegativityReport& r, Quantity q);

enum class StateMode { pure_member, degenerate_mixture };
StateMode parse_state_mode(const std::string& text);

/// Relative energy tolerance for ties between level families.
inline constexpr double kTieTolerance = 1e-9;

struct GroundPhase {
  /// Lowest level. Among tied levels the one with the largest S_t^z is
  /// reported, i.e. the h -> 0+ ground state.
  LevelLabel label;
  double energy = 0.0;
  /// More than one level family within the tie tolerance.
  bool boundary = false;
  std::vector<LevelLabel> tied;
};

GroundPhase ground_phase(const ModelParams& p);

struct PhaseCell {
  int ix = 0;
  int iy = 0;
  double x = 0.0;
  double y = 0.0;
  LevelLabel label;
  bool boundary = false;
  /// Name of the dominant closed-form amplitude of the ground eigenvector
  /// ("alpha", "beta", "gamma", "a1m", ...); empty for single-component states.
  std::string character;
};

struct BoundaryPoint {
  Point2 point;
  LevelLabel first;   // phase on the lower-index side of the grid edge
  LevelLabel second;  // phase on the higher-index side
};

struct PhaseBoundary {
  LevelLabel first;
  LevelLabel second;
  Polyline points;
};

struct PhaseMap {
  AxisRange x;
  AxisRange y;
  ModelParams fixed;
  std::vector<PhaseCell> cells;  // row-major, iy outer
  std::vector<BoundaryPoint> boundary_points;
  std::vector<PhaseBoundary> boundaries;

  const PhaseCell& cell(int ix, int iy) const { return cells[static_cast<std::size_t>(iy * x.count + ix)]; }
};

/// Bisection tolerance for boundary points, in the scanned parameter.
inline constexpr double kBoundaryTolerance = 1e-6;

PhaseMap scan_phases(const AxisRange& x, const AxisRange& y, const ModelParams& fixed, int threads = 1);

/// Entanglement quantity of one phase at a parameter point.
///  - pure_member: the |S_t, S_t^z> eigenvector carrying `phase`, regardless
///    of whether it is the ground state.
///  - degenerate_mixture: the ground-state density matrix; NaN when `phase`
///    is not the ground state at p.
double phase_quantity(const LevelLabel& phase, const ModelParams& p, StateMode mode, Quantity q);

/// Interval of h/J >= 0 on which the S_t^z > 0 member of `phase` is the
/// ground state at the couplings of p (p.h is ignored). The upper end is
/// +inf for the saturated phase. Empty when the window has zero width.
std::optional<std::pair<double, double>> field_window(const LevelLabel& phase, const ModelParams& p);

struct MaximumResult {
  double location = 0.0;
  double value = 0.0;
  /// Grid intervals of the free parameter where `phase` is admissible.
  std::vector<std::pair<double, double>> stable_intervals;
  bool location_stable = false;
  /// field_window at the maximum (pure_member mode along D or J1).
  std::optional<std::pair<double, double>> window;
};

/// Maximizes a quantity of `phase` along one axis: grid scan over `range`
/// followed by golden-section refinement (location tolerance 1e-7).
/// pure_member: the eigenvector does not depend on h, so along D or J1 a
/// point counts as stable when field_window is non-empty; the maximum is
/// taken over the whole range. degenerate_mixture: only points where `phase`
/// is the ground state at fixed.h are admissible.
/// Throws std::invalid_argument if `phase` is never the ground state in range.
MaximumResult find_gtn_maximum(const LevelLabel& phase, const AxisRange& range, const ModelParams& fixed,
                               StateMode mode = StateMode::pure_member, Quantity q = Quantity::gtn);

}  // namespace trimer
