#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dstab/error.hpp"
#include "dstab/geom.hpp"

using namespace dstab;

namespace {

void expect_near(Point a, Point b, double eps = 1e-12) {
  EXPECT_NEAR(a.x, b.x, eps);
  EXPECT_NEAR(a.y, b.y, eps);
}

}  // namespace

TEST(DisksIntersect, TangentUnitDisks) {
  EXPECT_TRUE(disks_intersect({{0, 0}, 1}, {{2, 0}, 1}));
}

TEST(DisksIntersect, SeparatedUnitDisks) {
  EXPECT_FALSE(disks_intersect({{0, 0}, 1}, {{2.1, 0}, 1}));
}

TEST(DisksIntersect, NestedDisks) {
  EXPECT_TRUE(disks_intersect({{0, 0}, 3}, {{1, 0}, 0.5}));
}

TEST(PointInDisk, Examples) {
  const Disk unit{{0, 0}, 1};
  EXPECT_TRUE(point_in_disk({0, 0}, unit));
  EXPECT_TRUE(point_in_disk({0, 1}, unit));
  EXPECT_FALSE(point_in_disk({0, 1.001}, unit, {1e-9, 1e-12}));
}

TEST(DiskIntersectsLine, Examples) {
  const Line y1({0, 1}, 1);
  EXPECT_TRUE(disk_intersects_line({{0, 2}, 1}, y1));
  EXPECT_FALSE(disk_intersects_line({{0, 3}, 1}, y1));
  EXPECT_TRUE(disk_intersects_line({{5, 0}, 2}, Line({1, 0}, 4)));
}

TEST(TangentLineAt, BottomOfUnitDisk) {
  const Line l = tangent_line_at({{0, 0}, 1}, {0, -1});
  expect_near(l.closest_point({3, 7}), {3, -1});
  EXPECT_GT(l.signed_distance({0, -2}), 0.0);
  EXPECT_LT(l.signed_distance({0, 0}), 0.0);
}

TEST(TangentLineAt, RightOfUnitDisk) {
  const Line l = tangent_line_at({{0, 0}, 1}, {1, 0});
  expect_near(l.closest_point({-4, 2}), {1, 2});
  EXPECT_GT(l.signed_distance({2, 0}), 0.0);
}

TEST(TangentLineAt, ShiftedDisk) {
  const Line l = tangent_line_at({{2, 0}, 2}, {4, 0});
  expect_near(l.closest_point({0, 5}), {4, 5});
}

TEST(TangentLineAt, RejectsInteriorPoint) {
  EXPECT_THROW(tangent_line_at({{0, 0}, 1}, {0.5, 0}), Error);
}

TEST(Similarity, Identity) {
  expect_near(apply(Similarity::identity(), Point{3, -4}), {3, -4});
}

TEST(Similarity, ScaleThenTranslate) {
  const Similarity t{0.0, 2.0, {1, 0}, false};
  expect_near(apply(t, Point{1, 1}), {3, 2});
}

TEST(Similarity, ReflectOnly) {
  expect_near(apply(Similarity::reflect_y_axis(), Point{1, 2}), {-1, 2});
}

TEST(Similarity, ReflectBeforeRotate) {
  const Similarity t{std::numbers::pi / 2, 1.0, {}, true};
  // (1,0) -> (-1,0) -> (0,-1)
  expect_near(apply(t, Point{1, 0}), {0, -1});
}

TEST(Similarity, DiskRadiusScales) {
  const Disk d = apply(Similarity{0.3, 2.5, {1, 1}, true}, Disk{{0, 0}, 2});
  EXPECT_NEAR(d.radius, 5.0, 1e-12);
  expect_near(d.center, {1, 1});
}

TEST(Similarity, LineMapsWithPoints) {
  const Similarity t{1.1, 0.7, {3, -2}, true};
  const Line l({1, 2}, 3);
  const Line m = apply(t, l);
  const Point on = l.closest_point({5, 5});
  EXPECT_NEAR(m.signed_distance(apply(t, on)), 0.0, 1e-12);
  EXPECT_GT(m.signed_distance(apply(t, on + l.normal())) * l.signed_distance(on + l.normal()), 0.0);
}

TEST(Similarity, ComposeMatchesSequentialApply) {
  const Similarity a{0.4, 1.5, {1, 2}, true}, b{-2.0, 0.3, {-4, 0.5}, false};
  const Point p{0.7, -1.9};
  expect_near(apply(compose(a, b), p), apply(a, apply(b, p)), 1e-12);
}

TEST(SimilarityProperty, RoundTripHundredThousandTrials) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  std::bernoulli_distribution flip(0.5);
  double worst = 0.0;
  for (int i = 0; i < 100'000; ++i) {
    const Similarity t{angle(rng), std::exp(log_scale(rng)), {coord(rng), coord(rng)}, flip(rng)};
    const Point p{coord(rng), coord(rng)};
    const double mag = std::max(1.0, norm(p));
    worst = std::max(worst, distance(apply(invert(t), apply(t, p)), p) / mag);
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Line, ZeroNormalThrows) { EXPECT_THROW(Line({0, 0}, 1), Error); }

TEST(DistanceToSegment, EndpointsAndInterior) {
  EXPECT_NEAR(distance_to_segment({0, 1}, {-1, 0}, {1, 0}), 1.0, 1e-15);
  EXPECT_NEAR(distance_to_segment({3, 4}, {-1, 0}, {0, 0}), 5.0, 1e-15);
}
