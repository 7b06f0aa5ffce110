#pragma once

#include <span>
#include <vector>

#include "trimer/geometry.hpp"
#include "trimer/scans.hpp"

namespace trimer {

struct ContourLevel {
  double isovalue = 0.0;
  std::vector<Polyline> polylines;
};

struct ContourSet {
  std::vector<ContourLevel> levels;
  std::size_t polyline_count() const;
};

/// Marching squares with linear interpolation along cell edges. A corner is
/// inside when value >= isovalue; saddle cells are resolved with the mean of
/// the four corners. A field that never crosses an isovalue yields no
/// polylines for it.
ContourSet extract_contours(const GridScan& scan, std::span<const double> isovalues);

}  // namespace trimer
