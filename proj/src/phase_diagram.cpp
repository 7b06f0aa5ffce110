#include "trimer/phase_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "trimer/parallel.hpp"

namespace trimer {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Position of a label in the fixed family order, for deterministic tie breaks.
int family_rank(const std::vector<LevelEnergy>& levels, const LevelLabel& l) {
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i].label == l) return static_cast<int>(i);
  return static_cast<int>(levels.size());
}

std::string dominant_component(const AnalyticLevel& level) {
  if (level.components.size() < 2) return {};
  const auto it = std::max_element(level.components.begin(), level.components.end(),
                                   [](const Component& a, const Component& b) {
                                     return std::abs(a.amplitude) < std::abs(b.amplitude);
                                   });
  return it->name;
}

ModelParams at(const ModelParams& fixed, Axis ax, double vx, Axis ay, double vy) {
  ModelParams p = fixed;
  set_axis(p, ax, vx);
  set_axis(p, ay, vy);
  return p;
}

LevelLabel family_key(const LevelLabel& l) {
  LevelLabel k = l;
  k.two_sz = std::abs(k.two_sz);
  return k;
}

bool family_less(const LevelLabel& a, const LevelLabel& b) {
  return std::tie(a.two_st, a.two_sz, a.branch) < std::tie(b.two_st, b.two_sz, b.branch);
}

}  // namespace

Axis parse_axis(const std::string& text) {
  const std::string t = lower(text);
  if (t == "h" || t == "h/j") return Axis::h;
  if (t == "d" || t == "d/j") return Axis::D;
  if (t == "j1" || t == "j1/j") return Axis::J1;
  throw std::invalid_argument("unknown axis '" + text + "' (expected h, d or j1)");
}

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::h: return "h/J";
    case Axis::D: return "D/J";
    case Axis::J1: return "J1/J";
  }
  return "?";
}

void set_axis(ModelParams& p, Axis axis, double value) {
  switch (axis) {
    case Axis::h: p.h = value; break;
    case Axis::D: p.D = value; break;
    case Axis::J1: p.J1 = value; break;
  }
}

double AxisRange::value(int i) const {
  if (i == count - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void AxisRange::validate() const {
  if (count < 2) throw std::invalid_argument(std::string("axis ") + axis_name(axis) + " needs at least 2 points");
  if (!std::isfinite(min) || !std::isfinite(max)) throw std::invalid_argument("axis range must be finite");
  if (min == max) throw std::invalid_argument(std::string("axis ") + axis_name(axis) + " has an empty range");
}

Quantity parse_quantity(const std::string& text) {
  const std::string t = lower(text);
  if (t == "gtn") return Quantity::gtn;
  if (t == "n_mu" || t == "nmu") return Quantity::n_mu;
  if (t == "n_s1" || t == "ns1") return Quantity::n_s1;
  throw std::invalid_argument("unknown quantity '" + text + "' (expected gtn, n_mu or n_s1)");
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::gtn: return "gtn";
    case Quantity::n_mu: return "n_mu";
    case Quantity::n_s1: return "n_s1";
  }
  return "?";
}

double select(const NegativityReport& r, Quantity q) {
  switch (q) {
    case Quantity::gtn: return r.gtn;
    case Quantity::n_mu: return r.n_mu;
    case Quantity::n_s1: return r.n_s1;
  }
  return r.gtn;
}

StateMode parse_state_mode(const std::string& text) {
  const std::string t = lower(text);
  if (t == "pure" || t == "pure_member") return StateMode::pure_member;
  if (t == "mixture" || t == "degenerate_mixture") return StateMode::degenerate_mixture;
  throw std::invalid_argument("unknown state mode '" + text + "' (expected pure or mixture)");
}

GroundPhase ground_phase(const ModelParams& p) {
  const auto levels = analytic_energies(p);
  double e_min = std::numeric_limits<double>::infinity();
  for (const auto& l : levels) e_min = std::min(e_min, l.energy);
  const double tol = kTieTolerance * std::max(1.0, std::abs(e_min));

  GroundPhase g;
  g.energy = e_min;
  for (const auto& l : levels)
    if (l.energy - e_min <= tol) g.tied.push_back(l.label);

  const auto best = std::max_element(g.tied.begin(), g.tied.end(), [&](const LevelLabel& a, const LevelLabel& b) {
    if (a.two_sz != b.two_sz) return a.two_sz < b.two_sz;
    return family_rank(levels, a) > family_rank(levels, b);
  });
  g.label = *best;
  for (const auto& l : g.tied)
    if (!l.same_family(g.label)) g.boundary = true;
  return g;
}

PhaseMap scan_phases(const AxisRange& x, const AxisRange& y, const ModelParams& fixed, int threads) {
  x.validate();
  y.validate();
  if (x.axis == y.axis) throw std::invalid_argument("phase diagram axes must differ");
  fixed.validate();

  PhaseMap map;
  map.x = x;
  map.y = y;
  map.fixed = fixed;
  const int nx = x.count, ny = y.count;
  map.cells.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));

  parallel_for(map.cells.size(), threads, [&](std::size_t k) {
    const int ix = static_cast<int>(k) % nx, iy = static_cast<int>(k) / nx;
    PhaseCell& c = map.cells[k];
    c.ix = ix;
    c.iy = iy;
    c.x = x.value(ix);
    c.y = y.value(iy);
    const ModelParams p = at(fixed, x.axis, c.x, y.axis, c.y);
    const GroundPhase g = ground_phase(p);
    c.label = g.label;
    c.boundary = g.boundary;
    c.character = dominant_component(find_level(analytic_eigensystem(p), g.label));
  });

  // Edges are numbered: horizontal (ix,iy)-(ix+1,iy) first, then vertical.
  const std::size_t n_horizontal = static_cast<std::size_t>(nx - 1) * static_cast<std::size_t>(ny);
  const std::size_t n_edges = n_horizontal + static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny - 1);
  std::vector<std::optional<BoundaryPoint>> edge_points(n_edges);

  parallel_for(n_edges, threads, [&](std::size_t e) {
    int ix0, iy0, ix1, iy1;
    if (e < n_horizontal) {
      ix0 = static_cast<int>(e % static_cast<std::size_t>(nx - 1));
      iy0 = static_cast<int>(e / static_cast<std::size_t>(nx - 1));
      ix1 = ix0 + 1;
      iy1 = iy0;
    } else {
      const std::size_t v = e - n_horizontal;
      ix0 = static_cast<int>(v % static_cast<std::size_t>(nx));
      iy0 = static_cast<int>(v / static_cast<std::size_t>(nx));
      ix1 = ix0;
      iy1 = iy0 + 1;
    }
    const PhaseCell& a = map.cell(ix0, iy0);
    const PhaseCell& b = map.cell(ix1, iy1);
    if (a.label.same_family(b.label)) return;

    const bool along_x = iy0 == iy1;
    double lo = along_x ? a.x : a.y, hi = along_x ? b.x : b.y;
    LevelLabel first = a.label, second = b.label;
    while (std::abs(hi - lo) > kBoundaryTolerance) {
      const double mid = 0.5 * (lo + hi);
      const ModelParams p = along_x ? at(fixed, x.axis, mid, y.axis, a.y) : at(fixed, x.axis, a.x, y.axis, mid);
      const LevelLabel m = ground_phase(p).label;
      if (m.same_family(first)) {
        lo = mid;
      } else {
        hi = mid;
        second = m;
      }
    }
    const double mid = 0.5 * (lo + hi);
    BoundaryPoint bp;
    bp.point = along_x ? Point2{mid, a.y} : Point2{a.x, mid};
    bp.first = first;
    bp.second = second;
    edge_points[e] = bp;
  });

  for (const auto& bp : edge_points)
    if (bp) map.boundary_points.push_back(*bp);

  // Join crossing points of each grid square into segments, grouped by the
  // unordered pair of phases they separate.
  auto pair_key = [](const BoundaryPoint& bp) {
    LevelLabel a = family_key(bp.first), b = family_key(bp.second);
    if (family_less(b, a)) std::swap(a, b);
    return std::make_pair(a, b);
  };
  using Key = std::pair<LevelLabel, LevelLabel>;
  auto key_less = [](const Key& l, const Key& r) {
    if (!(l.first == r.first)) return family_less(l.first, r.first);
    return family_less(l.second, r.second);
  };
  std::map<Key, std::vector<Segment>, decltype(key_less)> segments(key_less);

  auto horizontal = [&](int ix, int iy) -> const std::optional<BoundaryPoint>& {
    return edge_points[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx - 1) + static_cast<std::size_t>(ix)];
  };
  auto vertical = [&](int ix, int iy) -> const std::optional<BoundaryPoint>& {
    return edge_points[n_horizontal + static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                       static_cast<std::size_t>(ix)];
  };
  for (int iy = 0; iy + 1 < ny; ++iy) {
    for (int ix = 0; ix + 1 < nx; ++ix) {
      std::vector<const BoundaryPoint*> pts;
      for (const auto* e : {&horizontal(ix, iy), &vertical(ix + 1, iy), &horizontal(ix, iy + 1), &vertical(ix, iy)})
        if (*e) pts.push_back(&**e);
      std::vector<bool> used(pts.size(), false);
      // Pair points separating the same two phases first, then leftovers in order.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (used[i]) continue;
          for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (used[j]) continue;
            if (pass == 0 && pair_key(*pts[i]) != pair_key(*pts[j])) continue;
            used[i] = used[j] = true;
            segments[pair_key(*pts[i])].push_back({pts[i]->point, pts[j]->point});
            break;
          }
        }
      }
    }
  }
  for (const auto& [key, segs] : segments)
    for (auto& line : chain_segments(segs)) map.boundaries.push_back({key.first, key.second, std::move(line)});
  return map;
}

std::optional<std::pair<double, double>> field_window(const LevelLabel& phase, const ModelParams& p) {
  ModelParams zero = p;
  zero.h = 0.0;
  const auto levels = analytic_energies(zero);
  LevelLabel member = phase;
  member.two_sz = std::abs(member.two_sz);
  double a_p = 0.0;
  bool found = false;
  double e_min = std::numeric_limits<double>::infinity();
  for (const auto& l : levels) {
    e_min = std::min(e_min, l.energy);
    if (l.label == member) a_p = l.energy, found = true;
  }
  if (!found) throw std::invalid_argument("unknown level " + phase.display());
  const double tol = kTieTolerance * std::max(1.0, std::abs(e_min));
  const double s_p = 0.5 * member.two_sz;

  // E_k(h) = a_k - s_k h; require E_p(h) <= E_k(h) for every other family.
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (const auto& l : levels) {
    if (l.label.same_family(member)) continue;
    const double s_k = 0.5 * l.label.two_sz;
    const double slack = l.energy - a_p + tol;
    if (s_k == s_p) {
      if (slack < 0.0) return std::nullopt;
    } else if (s_k > s_p) {
      hi = std::min(hi, slack / (s_k - s_p));
    } else {
      lo = std::max(lo, slack / (s_k - s_p));
    }
  }
  if (!(hi > lo + tol)) return std::nullopt;
  return std::make_pair(lo, hi);
}

double phase_quantity(const LevelLabel& phase, const ModelParams& p, StateMode mode, Quantity q) {
  const auto levels = analytic_eigensystem(p);
  if (mode == StateMode::pure_member) return select(gtn(pure_density_matrix(find_level(levels, phase).vector)), q);
  if (!ground_phase(p).label.same_family(phase)) return std::numeric_limits<double>::quiet_NaN();
  return select(gtn(ground_state_density_matrix(to_spectrum(levels))), q);
}

MaximumResult find_gtn_maximum(const LevelLabel& phase, const AxisRange& range, const ModelParams& fixed,
                               StateMode mode, Quantity q) {
  range.validate();
  fixed.validate();
  auto params_at = [&](double v) {
    ModelParams p = fixed;
    set_axis(p, range.axis, v);
    return p;
  };
  const bool any_field = mode == StateMode::pure_member && range.axis != Axis::h;
  auto stable = [&](double v) {
    if (any_field) return field_window(phase, params_at(v)).has_value();
    return ground_phase(params_at(v)).label.same_family(phase);
  };
  // NaN (not admissible) maps to -inf so comparisons stay ordered.
  auto f = [&](double v) {
    const double r = phase_quantity(phase, params_at(v), mode, q);
    return std::isnan(r) ? -std::numeric_limits<double>::infinity() : r;
  };

  MaximumResult res;
  std::vector<double> xs(static_cast<std::size_t>(range.count));
  std::vector<bool> st(xs.size());
  for (int i = 0; i < range.count; ++i) {
    xs[static_cast<std::size_t>(i)] = range.value(i);
    st[static_cast<std::size_t>(i)] = stable(xs[static_cast<std::size_t>(i)]);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!st[i]) continue;
    if (i == 0 || !st[i - 1]) res.stable_intervals.push_back({xs[i], xs[i]});
    res.stable_intervals.back().second = xs[i];
  }
  if (res.stable_intervals.empty())
    throw std::invalid_argument(phase.display() + " is not the ground state anywhere on " + axis_name(range.axis) +
                                " in the requested range" + (any_field ? " for any h/J >= 0" : ""));

  std::size_t best = xs.size();
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double v = f(xs[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best == xs.size()) throw std::runtime_error("no admissible point for " + phase.display());

  double a = xs[best > 0 ? best - 1 : 0];
  double b = xs[best + 1 < xs.size() ? best + 1 : best];
  if (a > b) std::swap(a, b);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (std::abs(b - a) > 1e-7) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x_ref = 0.5 * (a + b);
  const double f_ref = f(x_ref);
  if (f_ref >= best_value) {
    res.location = x_ref;
    res.value = f_ref;
  } else {
    res.location = xs[best];
    res.value = best_value;
  }
  res.location_stable = stable(res.location);
  if (any_field) res.window = field_window(phase, params_at(res.location));
  return res;
}

}  // namespace trimer
