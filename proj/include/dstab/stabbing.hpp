#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dstab/geom.hpp"
#include "dstab/min_stabber.hpp"

namespace dstab {

/// Which branch produced the stabbing set.
enum class CaseTag {
  Helly,
  Five,
  FourRminGe4,
  FourRminLe2A17,
  FourRminLe2YPos,
  FourRminLe2YNeg,
  FourMidSub1,
  FourMidSub2,
  FourMidSub3,
  FourMidSub4,
};

inline constexpr std::array kAllCaseTags{
    CaseTag::Helly,          CaseTag::Five,           CaseTag::FourRminGe4,
    CaseTag::FourRminLe2A17, CaseTag::FourRminLe2YPos, CaseTag::FourRminLe2YNeg,
    CaseTag::FourMidSub1,    CaseTag::FourMidSub2,    CaseTag::FourMidSub3,
    CaseTag::FourMidSub4,
};

/// Upper-case names, e.g. "FOUR_MID_SUB2".
std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view name);

/// Stabbing points of a branch, in the frame that branch uses.
std::span<const Point> frame_points_for(CaseTag tag);

struct StabResult {
  /// Input coordinates.
  std::vector<Point> points;
  CaseTag case_tag = CaseTag::Helly;
  /// Same points in the frame they were chosen in.
  std::vector<Point> frame_points;
  /// Input -> frame map used for this result.
  Similarity to_frame;
  MinStabResult min_stab;
  /// The disk the branch keyed on: d (r_min <= 2) or d' (middle subcases 1-3).
  std::optional<std::size_t> key_disk;
  /// Angle of the key disk's center for the r_min <= 2 branches, degrees.
  std::optional<double> alpha;
  std::optional<double> r_min;
};

/// Convex angle in degrees, [0, 90], between the segment from the origin to
/// `c` and the x-axis. Throws ZeroVector at the origin.
double compute_alpha(Point c);

/// Branch of the r_min <= 2 case for the key disk center `c` in the base
/// frame, already reflected so that x(c) >= 0. `angle_eps` is in degrees.
CaseTag small_radius_branch(Point c, double angle_eps = 1e-9);

/// Five points from the base frame, or one point when the disks share a point.
StabResult stab_five(std::span<const Disk> disks, const Tolerance& tol = {},
                     std::uint64_t seed = 0);

/// At most four points: case analysis on the smallest disk avoiding c*.
StabResult stab_four(std::span<const Disk> disks, const Tolerance& tol = {},
                     std::uint64_t seed = 0);

}  // namespace dstab
