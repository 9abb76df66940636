#include "dstab/framing.hpp"

#include <algorithm>
#include <cmath>

#include "dstab/error.hpp"

namespace dstab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTieDeg = 1e-9;

double ccw_arc(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

}  // namespace

std::vector<Disk> transform_disks(const Similarity& t, std::span<const Disk> disks) {
  std::vector<Disk> out;
  out.reserve(disks.size());
  for (const Disk& d : disks) out.push_back(apply(t, d));
  return out;
}

Similarity normalize_to_dstar(const MinStabResult& ms) {
  if (!(ms.optimal_value > 0.0) || !(ms.dstar.radius > 0.0)) {
    throw Error(ErrorKind::DegenerateBasis, "normalized frames need a positive-radius d*");
  }
  const double s = 1.0 / ms.dstar.radius;
  return {0.0, s, -s * ms.dstar.center, false};
}

BaseFrame build_base_frame(std::span<const Disk> disks, const MinStabResult& ms) {
  if (ms.basis.size() != 3) {
    throw Error(ErrorKind::DegenerateBasis, "base frame needs exactly three tangent disks");
  }
  const Similarity norm_t = normalize_to_dstar(ms);

  // Basis disks sorted counterclockwise by the direction of their tangency.
  struct Tangent {
    std::size_t index;
    double angle;
  };
  std::array<Tangent, 3> ring{};
  for (int k = 0; k < 3; ++k) {
    const Point c = apply(norm_t, disks[ms.basis[k]].center);
    if (!(norm(c) > 0.0)) {
      throw Error(ErrorKind::DegenerateBasis, "basis disk is concentric with d*");
    }
    ring[k] = {ms.basis[k], std::atan2(c.y, c.x)};
  }
  std::sort(ring.begin(), ring.end(), [](const Tangent& a, const Tangent& b) {
    return a.angle < b.angle || (a.angle == b.angle && a.index < b.index);
  });

  // arc[k] runs counterclockwise from ring[k] to ring[k+1]. The triangle
  // angle at the vertex of the two tangent lines bounding that arc is
  // 180 - arc, so the largest angle sits at the smallest arc.
  std::array<double, 3> arc{};
  for (int k = 0; k < 3; ++k) arc[k] = degrees(ccw_arc(ring[k].angle, ring[(k + 1) % 3].angle));
  const double smallest = *std::min_element(arc.begin(), arc.end());

  int chosen = -1;
  for (int k = 0; k < 3; ++k) {
    if (arc[k] > smallest + kAngleTieDeg) continue;
    const int first = (k + 2) % 3;  // the point opposite the arc becomes x1
    if (chosen < 0 || ring[first].index < ring[(chosen + 2) % 3].index) chosen = k;
  }
  const int i1 = (chosen + 2) % 3;
  const int i3 = (i1 + 1) % 3;  // next counterclockwise from x1: right side
  const int i2 = (i1 + 2) % 3;

  const double rotation = -std::numbers::pi / 2.0 - ring[i1].angle;
  BaseFrame bf;
  bf.to_frame = compose(Similarity::rotate(rotation), norm_t);
  bf.tangent_disks = {ring[i1].index, ring[i2].index, ring[i3].index};
  const std::array<int, 3> slots{i1, i2, i3};
  for (int k = 0; k < 3; ++k) {
    const double a = ring[slots[k]].angle + rotation;
    const Point x{std::cos(a), std::sin(a)};
    bf.tangency_points[k] = x;
    bf.tangent_lines[k] = Line(x, 1.0);
    bf.reflected_lines[k] = Line(-x, 1.0);
  }
  bf.tangency_points[0] = {0.0, -1.0};
  bf.tangent_lines[0] = Line({0.0, -1.0}, 1.0);
  bf.reflected_lines[0] = Line({0.0, 1.0}, 1.0);

  bf.beta = 180.0 - arc[i1];   // x1 -> x3
  bf.apex = 180.0 - arc[i3];   // x3 -> x2
  bf.gamma = 180.0 - arc[i2];  // x2 -> x1
  for (double* angle : {&bf.beta, &bf.apex, &bf.gamma}) *angle = std::max(0.0, *angle);
  return bf;
}

BaseFrame reflect_base_frame(const BaseFrame& bf) {
  const Similarity mirror = Similarity::reflect_y_axis();
  BaseFrame out = bf;
  out.to_frame = compose(mirror, bf.to_frame);
  out.reflected = !bf.reflected;
  const std::array<int, 3> swap{0, 2, 1};
  for (int k = 0; k < 3; ++k) {
    const int from = swap[k];
    out.tangent_disks[k] = bf.tangent_disks[from];
    out.tangency_points[k] = apply(mirror, bf.tangency_points[from]);
    out.tangent_lines[k] = apply(mirror, bf.tangent_lines[from]);
    out.reflected_lines[k] = apply(mirror, bf.reflected_lines[from]);
  }
  out.beta = bf.gamma;
  out.gamma = bf.beta;
  return out;
}

AltFrame build_alt_frame(std::span<const Disk> disks, const MinStabResult& ms, std::size_t pivot,
                         const Tolerance& tol) {
  const Similarity norm_t = normalize_to_dstar(ms);
  const Disk d = apply(norm_t, disks[pivot]);
  const double dist = norm(d.center);
  if (!(dist - d.radius > tol.eps_abs)) {
    throw Error(ErrorKind::PivotContainsCenter, "pivot disk contains the center of d*");
  }
  const double rotation = -std::atan2(d.center.y, d.center.x);
  return {compose(Similarity::rotate(rotation), norm_t), pivot};
}

std::optional<std::size_t> DMinusInfo::argmax_delta() const {
  std::optional<std::size_t> best;
  for (std::size_t i : members) {
    if (!best || delta[i] > delta[*best] || (delta[i] == delta[*best] && i < *best)) best = i;
  }
  return best;
}

DMinusInfo classify_dminus(std::span<const Disk> frame_disks, double k, const Tolerance& tol) {
  DMinusInfo info;
  info.delta.resize(frame_disks.size());
  for (std::size_t i = 0; i < frame_disks.size(); ++i) {
    const Disk& d = frame_disks[i];
    const double delta = norm(d.center) - d.radius;
    info.delta[i] = delta;
    if (!(delta > tol.eps_abs)) continue;
    if (!info.r_min || d.radius < *info.r_min) {
      info.r_min = d.radius;
      info.d_min = i;
    }
    if (d.radius <= k + tol.eps_abs) info.members.push_back(i);
  }
  return info;
}

DMinusInfo classify_dminus(std::span<const Disk> disks, const MinStabResult& ms, double k,
                           const Tolerance& tol) {
  const auto frame_disks = transform_disks(normalize_to_dstar(ms), disks);
  return classify_dminus(frame_disks, k, tol);
}

}  // namespace dstab
