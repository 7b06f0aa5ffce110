#include "trimer/contours.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace trimer {

namespace {

using PointKey = std::pair<std::uint64_t, std::uint64_t>;

PointKey key_of(const Point2& p) { return {std::bit_cast<std::uint64_t>(p.x), std::bit_cast<std::uint64_t>(p.y)}; }

}  // namespace

std::vector<Polyline> chain_segments(const std::vector<Segment>& segments) {
  std::multimap<PointKey, std::size_t> at_point;
  std::vector<bool> used(segments.size(), false);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    // Zero-length pieces appear where a contour passes exactly through a grid point.
    if (segments[i][0] == segments[i][1]) {
      used[i] = true;
      continue;
    }
    at_point.emplace(key_of(segments[i][0]), i);
    at_point.emplace(key_of(segments[i][1]), i);
  }

  // Next unused segment touching p, and its far end.
  auto next_from = [&](const Point2& p) -> std::optional<std::pair<std::size_t, Point2>> {
    auto [lo, hi] = at_point.equal_range(key_of(p));
    for (auto it = lo; it != hi; ++it) {
      const std::size_t s = it->second;
      if (used[s]) continue;
      const Point2 far = segments[s][0] == p ? segments[s][1] : segments[s][0];
      return std::make_pair(s, far);
    }
    return std::nullopt;
  };

  std::vector<Polyline> lines;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    Polyline forward{segments[i][0], segments[i][1]};
    while (auto n = next_from(forward.back())) {
      used[n->first] = true;
      forward.push_back(n->second);
    }
    Polyline backward;
    if (!(forward.back() == forward.front())) {
      Point2 tip = forward.front();
      while (auto n = next_from(tip)) {
        used[n->first] = true;
        backward.push_back(n->second);
        tip = n->second;
      }
    }
    Polyline line(backward.rbegin(), backward.rend());
    line.insert(line.end(), forward.begin(), forward.end());
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t ContourSet::polyline_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.polylines.size();
  return n;
}

ContourSet extract_contours(const GridScan& scan, std::span<const double> isovalues) {
  const int nx = scan.x.count, ny = scan.y.count;
  ContourSet out;
  for (const double iso : isovalues) {
    ContourLevel level;
    level.isovalue = iso;
    auto inside = [&](int ix, int iy) { return scan.at(ix, iy) >= iso; };
    // Crossing on the edge from (ix0,iy0) to (ix1,iy1), always oriented from
    // the lower grid index so shared edges give bit-identical points.
    auto crossing = [&](int ix0, int iy0, int ix1, int iy1) {
      const double v0 = scan.at(ix0, iy0), v1 = scan.at(ix1, iy1);
      const double t = (iso - v0) / (v1 - v0);
      const double x0 = scan.x.value(ix0), x1 = scan.x.value(ix1);
      const double y0 = scan.y.value(iy0), y1 = scan.y.value(iy1);
      return Point2{ix0 == ix1 ? x0 : x0 + t * (x1 - x0), iy0 == iy1 ? y0 : y0 + t * (y1 - y0)};
    };

    std::vector<Segment> segs;
    for (int iy = 0; iy + 1 < ny; ++iy) {
      for (int ix = 0; ix + 1 < nx; ++ix) {
        const bool c0 = inside(ix, iy), c1 = inside(ix + 1, iy);
        const bool c2 = inside(ix + 1, iy + 1), c3 = inside(ix, iy + 1);
        // Edges: 0 bottom (c0-c1), 1 right (c1-c2), 2 top (c3-c2), 3 left (c0-c3).
        std::optional<Point2> e[4];
        if (c0 != c1) e[0] = crossing(ix, iy, ix + 1, iy);
        if (c1 != c2) e[1] = crossing(ix + 1, iy, ix + 1, iy + 1);
        if (c3 != c2) e[2] = crossing(ix, iy + 1, ix + 1, iy + 1);
        if (c0 != c3) e[3] = crossing(ix, iy, ix, iy + 1);
        int n = 0;
        for (const auto& p : e) n += p.has_value();
        if (n == 2) {
          Point2 pts[2];
          int k = 0;
          for (const auto& p : e)
            if (p) pts[k++] = *p;
          segs.push_back({pts[0], pts[1]});
        } else if (n == 4) {
          const double centre =
              0.25 * (scan.at(ix, iy) + scan.at(ix + 1, iy) + scan.at(ix + 1, iy + 1) + scan.at(ix, iy + 1));
          // Cut off the two corners whose state differs from the centre.
          const bool centre_in = centre >= iso;
          if (c0 != centre_in) {
            segs.push_back({*e[3], *e[0]});
            segs.push_back({*e[1], *e[2]});
          } else {
            segs.push_back({*e[0], *e[1]});
            segs.push_back({*e[2], *e[3]});
          }
        }
      }
    }
    level.polylines = chain_segments(segs);
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace trimer
