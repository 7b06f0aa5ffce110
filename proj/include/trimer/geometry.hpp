#pragma once

#include <array>
#include <vector>

namespace trimer {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point2&) const = default;
};

using Polyline = std::vector<Point2>;
using Segment = std::array<Point2, 2>;

/// Joins segments that share bit-identical endpoints into maximal polylines.
/// Closed loops come back with front() == back(); zero-length segments are
/// dropped. Output order follows the input order of each polyline's first
/// segment.
std::vector<Polyline> chain_segments(const std::vector<Segment>& segments);

}  // namespace trimer
