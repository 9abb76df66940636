#pragma once

#include <algorithm>
#include <limits>
#include <span>

#include "dstab/geom.hpp"
#include "dstab/min_stabber.hpp"

namespace dstab::oracle {

struct OracleResult {
  Point center;
  double value = 0.0;
};

namespace detail {

struct Min1d {
  double at = 0.0;
  double value = 0.0;
};

// Grid refinement of a convex function on [lo, hi]: the minimizer stays
// within one cell of the best node, so each round keeps those two cells.
template <class F>
Min1d refine_1d(F&& f, double lo, double hi, double resolution) {
  constexpr int kGrid = 11;
  for (;;) {
    const double h = (hi - lo) / (kGrid - 1);
    Min1d best{lo, f(lo)};
    for (int i = 1; i < kGrid; ++i) {
      const double x = lo + i * h;
      const double v = f(x);
      if (v < best.value) best = {x, v};
    }
    if (h < resolution) return best;
    lo = std::max(lo, best.at - h);
    hi = std::min(hi, best.at + h);
  }
}

}  // namespace detail

/// Minimizes the convex f(c) = max(|c - c_i| - r_i) by nested grid
/// refinement: the outer search runs over x on F(x) = min_y f(x, y), which
/// is convex as well. Cells end below `resolution`.
inline OracleResult grid_oracle(std::span<const Disk> disks, double resolution = 1e-8) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (const Disk& d : disks) {
    x0 = std::min(x0, d.center.x);
    x1 = std::max(x1, d.center.x);
    y0 = std::min(y0, d.center.y);
    y1 = std::max(y1, d.center.y);
  }
  // The minimizer lies in the hull of the centers.
  x0 -= resolution, x1 += resolution, y0 -= resolution, y1 += resolution;

  auto inner = [&](double x) {
    return detail::refine_1d([&](double y) { return evaluate_objective({x, y}, disks); }, y0, y1,
                             resolution);
  };
  const detail::Min1d outer =
      detail::refine_1d([&](double x) { return inner(x).value; }, x0, x1, resolution);
  const detail::Min1d y = inner(outer.at);
  return {{outer.at, y.at}, y.value};
}

}  // namespace dstab::oracle
