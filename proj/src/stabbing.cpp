#include "dstab/stabbing.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "dstab/error.hpp"
#include "dstab/framing.hpp"

namespace dstab {
namespace {

// x-coordinate of the right point on the unit circle centered at (1/2, 0)
// at height 1/5.
const double kRightPeak = 0.5 + 2.0 * std::sqrt(6.0) / 5.0;

const std::array<Point, 1> kHelly{{{0.0, 0.0}}};
const std::array<Point, 5> kFive{{{0.0, 0.0}, {2.0, 0.0}, {-2.0, 0.0}, {0.0, 2.0}, {0.0, -2.0}}};
const std::array<Point, 4> kRminGe4{{{0.0, 0.0}, {-4.0, 1.0}, {4.0, 1.0}, {0.0, -3.0}}};
const std::array<Point, 4> kA17{{{-0.5, 0.0}, {0.0, -1.7}, {0.0, 1.7}, {1.5, 0.0}}};
const std::array<Point, 4> kYPos{{{-0.5, 0.0}, {0.5, -2.5}, {-0.5, 1.83}, {kRightPeak, 0.2}}};
const std::array<Point, 4> kYNeg{{{-0.5, 0.0}, {0.5, 2.5}, {-0.5, -1.83}, {kRightPeak, -0.2}}};
const std::array<Point, 4> kSub1{{{0.0, 0.0}, {2.0, 0.0}, {0.4, 2.0}, {0.4, -2.0}}};
const std::array<Point, 4> kSub2{{{0.0, 0.0}, {2.0, 0.0}, {-0.15, 2.7}, {-0.15, -2.7}}};
const std::array<Point, 4> kSub3{{{0.0, 0.0}, {2.0, 0.0}, {-0.15, 1.75}, {-0.15, -1.75}}};
const std::array<Point, 4> kSub4{{{0.0, 0.0}, {2.5, 1.0}, {-2.5, 1.0}, {0.0, -1.52}}};

constexpr double kAlphaSplitDeg = 17.0;

StabResult finish(CaseTag tag, const Similarity& to_frame, MinStabResult ms) {
  StabResult out;
  out.case_tag = tag;
  out.to_frame = to_frame;
  out.min_stab = std::move(ms);
  const auto frame = frame_points_for(tag);
  out.frame_points.assign(frame.begin(), frame.end());
  const Similarity back = invert(to_frame);
  out.points.reserve(frame.size());
  for (Point p : frame) out.points.push_back(apply(back, p));
  return out;
}

StabResult helly(MinStabResult ms) {
  StabResult out;
  out.case_tag = CaseTag::Helly;
  out.to_frame = Similarity::translate(-ms.dstar.center);
  out.frame_points = {{0.0, 0.0}};
  out.points = {ms.dstar.center};
  out.min_stab = std::move(ms);
  return out;
}

bool is_helly(const MinStabResult& ms, const Tolerance& tol) {
  return ms.optimal_value <= tol.eps_abs;
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Helly: return "HELLY";
    case CaseTag::Five: return "FIVE";
    case CaseTag::FourRminGe4: return "FOUR_RMIN_GE4";
    case CaseTag::FourRminLe2A17: return "FOUR_RMIN_LE2_A17";
    case CaseTag::FourRminLe2YPos: return "FOUR_RMIN_LE2_YPOS";
    case CaseTag::FourRminLe2YNeg: return "FOUR_RMIN_LE2_YNEG";
    case CaseTag::FourMidSub1: return "FOUR_MID_SUB1";
    case CaseTag::FourMidSub2: return "FOUR_MID_SUB2";
    case CaseTag::FourMidSub3: return "FOUR_MID_SUB3";
    case CaseTag::FourMidSub4: return "FOUR_MID_SUB4";
  }
  return "UNKNOWN";
}

std::optional<CaseTag> case_tag_from_string(std::string_view name) {
  for (CaseTag tag : kAllCaseTags) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

std::span<const Point> frame_points_for(CaseTag tag) {
  switch (tag) {
    case CaseTag::Helly: return kHelly;
    case CaseTag::Five: return kFive;
    case CaseTag::FourRminGe4: return kRminGe4;
    case CaseTag::FourRminLe2A17: return kA17;
    case CaseTag::FourRminLe2YPos: return kYPos;
    case CaseTag::FourRminLe2YNeg: return kYNeg;
    case CaseTag::FourMidSub1: return kSub1;
    case CaseTag::FourMidSub2: return kSub2;
    case CaseTag::FourMidSub3: return kSub3;
    case CaseTag::FourMidSub4: return kSub4;
  }
  return {};
}

double compute_alpha(Point c) {
  if (c.x == 0.0 && c.y == 0.0) {
    throw Error(ErrorKind::ZeroVector, "angle of the zero vector is undefined");
  }
  return degrees(std::atan2(std::fabs(c.y), std::fabs(c.x)));
}

CaseTag small_radius_branch(Point c, double angle_eps) {
  const double alpha = compute_alpha(c);
  if (alpha <= kAlphaSplitDeg + angle_eps) return CaseTag::FourRminLe2A17;
  if (c.y == 0.0) {
    // alpha > 17 forces |y| > 0 for any nonzero center
    throw std::logic_error("small-radius branch: alpha above split with y(c) = 0");
  }
  return c.y > 0.0 ? CaseTag::FourRminLe2YPos : CaseTag::FourRminLe2YNeg;
}

StabResult stab_five(std::span<const Disk> disks, const Tolerance& tol, std::uint64_t seed) {
  MinStabResult ms = smallest_intersecting_disk(disks, tol, seed);
  if (is_helly(ms, tol)) return helly(std::move(ms));
  const BaseFrame bf = build_base_frame(disks, ms);
  return finish(CaseTag::Five, bf.to_frame, std::move(ms));
}

StabResult stab_four(std::span<const Disk> disks, const Tolerance& tol, std::uint64_t seed) {
  MinStabResult ms = smallest_intersecting_disk(disks, tol, seed);
  if (is_helly(ms, tol)) return helly(std::move(ms));

  const double eps = tol.eps_abs;
  const auto frame_disks = transform_disks(normalize_to_dstar(ms), disks);
  const DMinusInfo all = classify_dminus(frame_disks, kUnbounded, tol);
  if (!all.r_min) {
    // The basis disks are tangent to d*, so D- holds at least them.
    throw Error(ErrorKind::DegenerateBasis, "no disk avoids c* although d* has positive radius");
  }
  const double r_min = *all.r_min;

  if (r_min >= 4.0 - eps) {
    const BaseFrame bf = build_base_frame(disks, ms);
    StabResult out = finish(CaseTag::FourRminGe4, bf.to_frame, std::move(ms));
    out.r_min = r_min;
    return out;
  }

  if (r_min <= 2.0 + eps) {
    BaseFrame bf = build_base_frame(disks, ms);
    const DMinusInfo small = classify_dminus(frame_disks, 2.0, tol);
    const std::size_t key = *small.argmax_delta();
    Point c = apply(bf.to_frame, disks[key].center);
    if (c.x < 0.0) {
      bf = reflect_base_frame(bf);
      c = apply(bf.to_frame, disks[key].center);
    }
    const CaseTag tag = small_radius_branch(c, eps);
    StabResult out = finish(tag, bf.to_frame, std::move(ms));
    out.key_disk = key;
    out.alpha = compute_alpha(c);
    out.r_min = r_min;
    return out;
  }

  struct Subcase {
    CaseTag tag;
    double max_radius;
    double min_delta;
  };
  constexpr std::array<Subcase, 3> kSubcases{{
      {CaseTag::FourMidSub1, 5.0, 0.5},
      {CaseTag::FourMidSub2, 20.0, 0.5},
      {CaseTag::FourMidSub3, 5.0, 0.11},
  }};
  for (const Subcase& sub : kSubcases) {
    const DMinusInfo bounded = classify_dminus(frame_disks, sub.max_radius, tol);
    const auto key = bounded.argmax_delta();
    if (!key || bounded.delta[*key] < sub.min_delta - eps) continue;
    const AltFrame af = build_alt_frame(disks, ms, *key, tol);
    StabResult out = finish(sub.tag, af.to_frame, std::move(ms));
    out.key_disk = *key;
    out.r_min = r_min;
    return out;
  }

  const BaseFrame bf = build_base_frame(disks, ms);
  StabResult out = finish(CaseTag::FourMidSub4, bf.to_frame, std::move(ms));
  out.r_min = r_min;
  return out;
}

}  // namespace dstab
