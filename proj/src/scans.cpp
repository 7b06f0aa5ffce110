#include "trimer/scans.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "trimer/parallel.hpp"
#include "trimer/version.hpp"

namespace trimer {

namespace {

nlohmann::json params_json(const ModelParams& p) {
  return {{"J", p.J}, {"J1", p.J1}, {"D", p.D}, {"h", p.h}};
}

void finish_metadata(GridScan& scan, const ScanOptions& opt) {
  scan.metadata["quantity"] = scan.quantity;
  scan.metadata["code_version"] = kVersion;
  if (opt.timestamp) scan.metadata["timestamp"] = *opt.timestamp;
}

// Fills scan.values column by column; column(ix) returns the values for all iy.
void fill_columns(GridScan& scan, int threads, const std::function<std::vector<double>(int)>& column) {
  const int nx = scan.x.count, ny = scan.y.count;
  scan.values.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), 0.0);
  parallel_for(static_cast<std::size_t>(nx), threads, [&](std::size_t k) {
    const int ix = static_cast<int>(k);
    const std::vector<double> col = column(ix);
    for (int iy = 0; iy < ny; ++iy) scan.values[static_cast<std::size_t>(iy * nx + ix)] = col[static_cast<std::size_t>(iy)];
  });
}

std::map<std::pair<int, int>, int> negative_counts(const NegativityReport& r) {
  std::map<std::pair<int, int>, int> counts;
  for (int s = 0; s < 3; ++s) {
    for (const auto& ev : r.partitions[static_cast<std::size_t>(s)].spectrum) {
      auto& c = counts[{s, ev.block.value_or(0)}];
      if (ev.value < kNegativeEigenvalueThreshold) ++c;
    }
  }
  return counts;
}

}  // namespace

double GridAxis::value(int i) const {
  if (i == count - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void GridAxis::validate() const {
  if (count < 2) throw std::invalid_argument("axis " + name + " needs at least 2 points");
  if (!std::isfinite(min) || !std::isfinite(max)) throw std::invalid_argument("axis " + name + " range must be finite");
  if (min == max) throw std::invalid_argument("axis " + name + " has an empty range");
}

GridScan scan_gtn_zero_T(const GridAxis& d_axis, const GridAxis& h_axis, double j1, const ScanOptions& opt) {
  GridScan scan;
  scan.x = d_axis;
  scan.y = h_axis;
  scan.x.name = "D/J";
  scan.y.name = "h/J";
  scan.x.validate();
  scan.y.validate();
  scan.quantity = quantity_name(opt.quantity);
  ModelParams fixed;
  fixed.J1 = j1;
  fixed.validate();

  fill_columns(scan, opt.threads, [&](int ix) {
    std::vector<double> col(static_cast<std::size_t>(scan.y.count));
    for (int iy = 0; iy < scan.y.count; ++iy) {
      ModelParams p = fixed;
      p.D = scan.x.value(ix);
      p.h = scan.y.value(iy);
      if (p.h == 0.0) p.h = opt.zero_field_offset;
      const GroundPhase g = ground_phase(p);
      const auto levels = analytic_eigensystem(p);
      const auto& level = find_level(levels, g.label);
      col[static_cast<std::size_t>(iy)] = select(gtn(pure_density_matrix(level.vector)), opt.quantity);
    }
    return col;
  });

  scan.metadata["mode"] = "zero_temperature";
  scan.metadata["state"] = "pure ground eigenvector, largest S_t^z on ties";
  scan.metadata["fixed"] = params_json(fixed);
  scan.metadata["zero_field_offset"] = opt.zero_field_offset;
  finish_metadata(scan, opt);
  return scan;
}

GridScan scan_thermal(const GridAxis& h_axis, const GridAxis& t_axis, const ModelParams& fixed,
                      const ScanOptions& opt) {
  GridScan scan;
  scan.x = h_axis;
  scan.y = t_axis;
  scan.x.name = "h/J";
  scan.y.name = "kT/J";
  scan.x.validate();
  scan.y.validate();
  fixed.validate();
  if (scan.y.min <= 0.0 || scan.y.max <= 0.0) throw std::invalid_argument("temperatures must be positive");
  scan.quantity = quantity_name(opt.quantity);

  fill_columns(scan, opt.threads, [&](int ix) {
    ModelParams p = fixed;
    p.h = scan.x.value(ix);
    const Spectrum s = to_spectrum(analytic_eigensystem(p));
    std::vector<double> col(static_cast<std::size_t>(scan.y.count));
    for (int iy = 0; iy < scan.y.count; ++iy)
      col[static_cast<std::size_t>(iy)] = select(gtn(thermal_density_matrix(s, scan.y.value(iy))), opt.quantity);
    return col;
  });

  ModelParams shown = fixed;
  shown.h = 0.0;
  scan.metadata["mode"] = "thermal";
  scan.metadata["fixed"] = params_json(shown);
  finish_metadata(scan, opt);
  return scan;
}

GridScan scan_thermal_compound(const GridAxis& field_axis, const GridAxis& temperature_axis,
                               const PhysicalParams& compound, const ScanOptions& opt) {
  GridScan scan;
  scan.x = field_axis;
  scan.y = temperature_axis;
  scan.x.name = "B [T]";
  scan.y.name = "T [K]";
  scan.x.validate();
  scan.y.validate();
  if (scan.y.min <= 0.0 || scan.y.max <= 0.0) throw std::invalid_argument("temperatures must be positive");
  PhysicalParams base = compound;
  base.field_tesla = 0.0;
  base.temperature_kelvin = 1.0;
  base.validate();
  scan.quantity = quantity_name(opt.quantity);

  fill_columns(scan, opt.threads, [&](int ix) {
    PhysicalParams phys = base;
    phys.field_tesla = scan.x.value(ix);
    const Spectrum s = to_spectrum(analytic_eigensystem(to_model_units(phys).params));
    std::vector<double> col(static_cast<std::size_t>(scan.y.count));
    for (int iy = 0; iy < scan.y.count; ++iy) {
      phys.temperature_kelvin = scan.y.value(iy);
      col[static_cast<std::size_t>(iy)] =
          select(gtn(thermal_density_matrix(s, to_model_units(phys).kT_over_J)), opt.quantity);
    }
    return col;
  });

  scan.metadata["mode"] = "thermal_compound";
  scan.metadata["compound"] = {{"j_wavenumber", base.j_wavenumber},
                               {"j1_wavenumber", base.j1_wavenumber},
                               {"d_over_j", base.d_over_j},
                               {"g", base.g_factor},
                               {"j_kelvin", exchange_kelvin(base)}};
  finish_metadata(scan, opt);
  return scan;
}

std::vector<NegativityKink> find_negativity_kinks(const ModelParams& p, const GridAxis& t_axis) {
  t_axis.validate();
  if (t_axis.min <= 0.0 || t_axis.max <= 0.0) throw std::invalid_argument("temperatures must be positive");
  const Spectrum s = to_spectrum(analytic_eigensystem(p));
  auto report = [&](double kT) { return gtn(thermal_density_matrix(s, kT)); };

  std::vector<NegativityKink> kinks;
  auto prev_t = t_axis.value(0);
  auto prev = negative_counts(report(prev_t));
  for (int i = 1; i < t_axis.count; ++i) {
    const double t = t_axis.value(i);
    const auto cur = negative_counts(report(t));
    for (const auto& [key, count] : cur) {
      const auto it = prev.find(key);
      if (it == prev.end() || it->second == count) continue;
      double lo = prev_t, hi = t;
      const int count_lo = it->second;
      while (std::abs(hi - lo) > 1e-9 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (negative_counts(report(mid)).at(key) == count_lo)
          lo = mid;
        else
          hi = mid;
      }
      const double t0 = 0.5 * (lo + hi);
      const double g0 = report(t0).gtn;
      if (!(g0 > 0.0)) continue;
      const double step = 1e-4 * std::max(1.0, t0);
      NegativityKink k;
      k.temperature = t0;
      k.site = kAllSites[static_cast<std::size_t>(key.first)];
      k.slope_below = (g0 - report(t0 - step).gtn) / step;
      k.slope_above = (report(t0 + step).gtn - g0) / step;
      kinks.push_back(k);
    }
    prev = cur;
    prev_t = t;
  }
  return kinks;
}

}  // namespace trimer
