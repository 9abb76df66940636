#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "dstab/geom.hpp"
#include "dstab/min_stabber.hpp"

namespace dstab {

/// Normalized frame in which d* is the unit disk at the origin, x1 = (0,-1),
/// l2 rises, l3 falls and the largest angle of the triangle bounded by the
/// three tangent lines sits at l2 ∩ l3.
///
/// Index 0/1/2 of every array corresponds to d1/d2/d3. All geometry is in
/// frame coordinates.
struct BaseFrame {
  Similarity to_frame;
  std::array<std::size_t, 3> tangent_disks{};
  std::array<Point, 3> tangency_points{};
  /// Tangent to d* at x_i; positive side is the halfplane holding d_i.
  std::array<Line, 3> tangent_lines{};
  /// Tangent lines mirrored through the origin.
  std::array<Line, 3> reflected_lines{};
  /// Triangle angles in degrees: at l1 ∩ l3, at l1 ∩ l2, at l2 ∩ l3.
  /// Parallel tangent lines give a 0 degree angle at the missing vertex.
  double beta = 0.0;
  double gamma = 0.0;
  double apex = 0.0;
  bool reflected = false;
};

/// Normalized frame with the center of the pivot disk on the positive x-axis.
struct AltFrame {
  Similarity to_frame;
  std::size_t pivot = 0;
};

/// Translate c* to the origin and scale r* to 1. Requires a positive d*
/// radius (DegenerateBasis otherwise).
Similarity normalize_to_dstar(const MinStabResult& ms);

/// Throws DegenerateBasis unless optimal_value > 0 and |basis| == 3.
BaseFrame build_base_frame(std::span<const Disk> disks, const MinStabResult& ms);

/// Mirror across the frame y-axis and swap the roles of d2 and d3.
BaseFrame reflect_base_frame(const BaseFrame& bf);

/// Throws PivotContainsCenter when delta(pivot) <= tol.eps_abs (frame units).
AltFrame build_alt_frame(std::span<const Disk> disks, const MinStabResult& ms, std::size_t pivot,
                         const Tolerance& tol = {});

struct DMinusInfo {
  /// Disks with delta > eps_abs and radius <= k (+ eps_abs).
  std::vector<std::size_t> members;
  /// delta(d) = |c| - r for every disk, frame units.
  std::vector<double> delta;
  /// Smallest radius over all of D-, if D- is nonempty.
  std::optional<double> r_min;
  std::optional<std::size_t> d_min;

  /// Member with the largest delta; ties go to the smaller index.
  std::optional<std::size_t> argmax_delta() const;
};

constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// `frame_disks` must already be normalized (d* = unit disk at the origin).
DMinusInfo classify_dminus(std::span<const Disk> frame_disks, double k, const Tolerance& tol = {});

/// Normalizes `disks` through `ms` first.
DMinusInfo classify_dminus(std::span<const Disk> disks, const MinStabResult& ms, double k,
                           const Tolerance& tol = {});

std::vector<Disk> transform_disks(const Similarity& t, std::span<const Disk> disks);

}  // namespace dstab
