#pragma once

#include <cmath>
#include <numbers>

namespace dstab {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

struct Disk {
  Point center;
  double radius = 0.0;

  friend constexpr bool operator==(const Disk&, const Disk&) = default;
};

/// Absolute/relative slack used by every predicate. The effective slack of a
/// comparison against a length L is max(eps_abs, eps_rel * L).
struct Tolerance {
  double eps_abs = 1e-9;
  double eps_rel = 1e-12;

  double slack(double magnitude) const {
    return std::fmax(eps_abs, eps_rel * std::fabs(magnitude));
  }
  Tolerance scaled(double factor) const { return {eps_abs * factor, eps_rel}; }
};

/// Oriented line {p : dot(normal, p) = offset}. The positive side is
/// {p : dot(normal, p) > offset}.
class Line {
 public:
  Line() = default;
  /// Normalizes (a, b); throws ZeroVector if the normal vanishes.
  Line(Point normal, double offset);

  static Line through(Point p, Point direction_normal);

  Point normal() const { return normal_; }
  double offset() const { return offset_; }
  double signed_distance(Point p) const { return dot(normal_, p) - offset_; }
  Line flipped() const;
  /// Slope dy/dx; infinite for vertical lines.
  double slope() const;
  Point closest_point(Point p) const { return p - signed_distance(p) * normal_; }

 private:
  Point normal_{0.0, 1.0};
  double offset_ = 0.0;
};

/// p -> translation + scale * R(rotation) * F(p), with F the reflection
/// x -> -x applied only when `reflect` is set.
struct Similarity {
  double rotation = 0.0;
  double scale = 1.0;
  Point translation{};
  bool reflect = false;

  static Similarity identity() { return {}; }
  static Similarity rotate(double radians) { return {radians, 1.0, {}, false}; }
  static Similarity uniform_scale(double s) { return {0.0, s, {}, false}; }
  static Similarity translate(Point t) { return {0.0, 1.0, t, false}; }
  static Similarity reflect_y_axis() { return {0.0, 1.0, {}, true}; }
};

Point apply(const Similarity& t, Point p);
Disk apply(const Similarity& t, const Disk& d);
Line apply(const Similarity& t, const Line& l);
/// Linear part only (no translation); maps direction vectors.
Point apply_linear(const Similarity& t, Point v);
Similarity invert(const Similarity& t);
/// outer(inner(p)).
Similarity compose(const Similarity& outer, const Similarity& inner);

bool disks_intersect(const Disk& a, const Disk& b, const Tolerance& tol = {});
bool point_in_disk(Point p, const Disk& d, const Tolerance& tol = {});
bool disk_intersects_line(const Disk& d, const Line& l, const Tolerance& tol = {});

/// Tangent to `d` at the boundary point `p`, oriented so the center of `d`
/// is on the negative side at signed distance -radius.
Line tangent_line_at(const Disk& d, Point p, const Tolerance& tol = {});

/// Distance from `p` to the closed segment [a, b].
double distance_to_segment(Point p, Point a, Point b);

inline double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }
inline double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

}  // namespace dstab
