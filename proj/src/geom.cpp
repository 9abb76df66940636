#include "dstab/geom.hpp"

#include <algorithm>
#include <limits>

#include "dstab/error.hpp"

namespace dstab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::NotOnBoundary: return "point-not-on-boundary";
    case ErrorKind::DegenerateBasis: return "degenerate-basis";
    case ErrorKind::PivotContainsCenter: return "pivot-contains-center";
    case ErrorKind::ZeroVector: return "zero-vector";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::SamplerExhausted: return "sampler-exhausted";
    case ErrorKind::GenerationExhausted: return "generation-exhausted";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Line::Line(Point normal, double offset) {
  const double len = norm(normal);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw Error(ErrorKind::ZeroVector, "line normal must be a finite nonzero vector");
  }
  normal_ = normal / len;
  offset_ = offset / len;
}

Line Line::through(Point p, Point direction_normal) {
  Line l(direction_normal, 0.0);
  l.offset_ = dot(l.normal_, p);
  return l;
}

Line Line::flipped() const {
  Line l;
  l.normal_ = -normal_;
  l.offset_ = -offset_;
  return l;
}

double Line::slope() const {
  // direction is the normal rotated by +90 degrees: (-b, a)
  if (normal_.y == 0.0) return std::numeric_limits<double>::infinity();
  return -normal_.x / normal_.y;
}

Point apply_linear(const Similarity& t, Point v) {
  if (t.reflect) v.x = -v.x;
  const double c = std::cos(t.rotation);
  const double s = std::sin(t.rotation);
  return {t.scale * (c * v.x - s * v.y), t.scale * (s * v.x + c * v.y)};
}

Point apply(const Similarity& t, Point p) { return apply_linear(t, p) + t.translation; }

Disk apply(const Similarity& t, const Disk& d) {
  return {apply(t, d.center), d.radius * t.scale};
}

Line apply(const Similarity& t, const Line& l) {
  const Point n = apply_linear(t, l.normal());
  const Point on_line = apply(t, l.offset() * l.normal());
  return Line::through(on_line, n);
}

Similarity invert(const Similarity& t) {
  Similarity inv;
  inv.reflect = t.reflect;
  inv.rotation = t.reflect ? t.rotation : -t.rotation;
  inv.scale = 1.0 / t.scale;
  inv.translation = -apply_linear(inv, t.translation);
  return inv;
}

Similarity compose(const Similarity& outer, const Similarity& inner) {
  Similarity out;
  out.reflect = outer.reflect != inner.reflect;
  out.rotation = outer.rotation + (outer.reflect ? -inner.rotation : inner.rotation);
  out.rotation = std::remainder(out.rotation, 2.0 * std::numbers::pi);
  out.scale = outer.scale * inner.scale;
  out.translation = apply(outer, inner.translation);
  return out;
}

bool disks_intersect(const Disk& a, const Disk& b, const Tolerance& tol) {
  const double sum = a.radius + b.radius;
  return distance(a.center, b.center) <= sum + tol.slack(sum);
}

bool point_in_disk(Point p, const Disk& d, const Tolerance& tol) {
  return distance(p, d.center) <= d.radius + tol.slack(d.radius);
}

bool disk_intersects_line(const Disk& d, const Line& l, const Tolerance& tol) {
  return std::fabs(l.signed_distance(d.center)) <= d.radius + tol.slack(d.radius);
}

Line tangent_line_at(const Disk& d, Point p, const Tolerance& tol) {
  const Point radial = p - d.center;
  const double len = norm(radial);
  if (std::fabs(len - d.radius) > tol.slack(d.radius)) {
    throw Error(ErrorKind::NotOnBoundary, "tangent point is not on the disk boundary");
  }
  if (!(len > 0.0)) {
    throw Error(ErrorKind::ZeroVector, "tangent line of a point-disk is undefined");
  }
  return Line::through(p, radial);
}

double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

}  // namespace dstab
