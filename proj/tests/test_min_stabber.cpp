#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dstab/error.hpp"
#include "dstab/instances.hpp"
#include "dstab/min_stabber.hpp"
#include "oracle.hpp"

using namespace dstab;

namespace {

std::vector<Disk> triangle_side6() {
  const double h = 3.0 * std::sqrt(3.0);
  return {{{0, 0}, 1}, {{6, 0}, 1}, {{3, h}, 1}};
}

std::vector<Disk> symmetric_three() {
  std::vector<Disk> out;
  for (double deg : {270.0, 30.0, 150.0}) {
    out.push_back({{2 * std::cos(radians(deg)), 2 * std::sin(radians(deg))}, 1});
  }
  return out;
}

}  // namespace

TEST(SmallestIntersectingDisk, SingleDisk) {
  const std::vector<Disk> disks{{{5, 5}, 2}};
  const MinStabResult ms = smallest_intersecting_disk(disks);
  EXPECT_NEAR(ms.dstar.center.x, 5, 1e-12);
  EXPECT_NEAR(ms.dstar.center.y, 5, 1e-12);
  EXPECT_EQ(ms.dstar.radius, 0.0);
  EXPECT_NEAR(ms.optimal_value, -2, 1e-12);
}

TEST(SmallestIntersectingDisk, TwoUnitDisks) {
  const std::vector<Disk> disks{{{0, 0}, 1}, {{4, 0}, 1}};
  const MinStabResult ms = smallest_intersecting_disk(disks);
  EXPECT_NEAR(ms.dstar.center.x, 2, 1e-12);
  EXPECT_NEAR(ms.dstar.center.y, 0, 1e-12);
  EXPECT_NEAR(ms.dstar.radius, 1, 1e-12);
  auto basis = ms.basis;
  std::sort(basis.begin(), basis.end());
  EXPECT_EQ(basis, (std::vector<std::size_t>{0, 1}));
}

TEST(SmallestIntersectingDisk, ThreeFoldSymmetry) {
  const auto disks = symmetric_three();
  const MinStabResult ms = smallest_intersecting_disk(disks);
  EXPECT_NEAR(ms.dstar.center.x, 0, 1e-12);
  EXPECT_NEAR(ms.dstar.center.y, 0, 1e-12);
  EXPECT_NEAR(ms.dstar.radius, 1, 1e-12);
  EXPECT_EQ(ms.basis.size(), 3u);
}

TEST(SmallestIntersectingDisk, EquilateralSideSixMatchesOracle) {
  const auto disks = triangle_side6();
  const MinStabResult ms = smallest_intersecting_disk(disks);
  EXPECT_NEAR(ms.dstar.radius, 2 * std::sqrt(3.0) - 1, 1e-9);
  EXPECT_NEAR(oracle::grid_oracle(disks).value, 2 * std::sqrt(3.0) - 1, 1e-7);
}

TEST(SmallestIntersectingDisk, EmptyInputThrows) {
  EXPECT_THROW(smallest_intersecting_disk({}), Error);
}

TEST(EvaluateObjective, Examples) {
  const std::vector<Disk> one{{{3, 0}, 1}};
  EXPECT_DOUBLE_EQ(evaluate_objective({0, 0}, one), 2.0);
  const std::vector<Disk> two{{{3, 0}, 1}, {{0, 5}, 2}};
  EXPECT_DOUBLE_EQ(evaluate_objective({0, 0}, two), 3.0);
  const auto tri = triangle_side6();
  const MinStabResult ms = smallest_intersecting_disk(tri);
  EXPECT_NEAR(evaluate_objective(ms.dstar.center, tri), 2 * std::sqrt(3.0) - 1, 1e-12);
}

TEST(SmallestIntersectingDisk, AgreesWithOracleOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenProfile p{ProfileName::MixedRadii, 5 + seed, seed, 1.0, std::nullopt};
    const auto disks = gen_instance(p);
    const MinStabResult ms = smallest_intersecting_disk(disks, {}, seed);
    const auto oracle = oracle::grid_oracle(disks);
    EXPECT_NEAR(ms.optimal_value, oracle.value, 1e-6) << "seed " << seed;
  }
}

TEST(SmallestIntersectingDisk, PivotingFallbackAgrees) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenProfile p{ProfileName::TangentCore, 30, seed, 1.0, std::nullopt};
    const auto disks = gen_instance(p);
    EXPECT_NEAR(smallest_intersecting_disk(disks).optimal_value,
                smallest_intersecting_disk_pivoting(disks).optimal_value, 1e-9);
  }
}

TEST(SmallestIntersectingDisk, BasisIsTangent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenProfile p{ProfileName::TangentCore, 100, seed, 1.0, std::nullopt};
    const auto disks = gen_instance(p);
    const MinStabResult ms = smallest_intersecting_disk(disks);
    EXPECT_LT(basis_tangency_error(disks, ms), 1e-9);
  }
}

TEST(SmallestIntersectingDiskProperty, PermutationInvariance) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenProfile p{ProfileName::TangentCore, 40, seed, 1.0, std::nullopt};
    auto disks = gen_instance(p);
    const MinStabResult a = smallest_intersecting_disk(disks, {}, 3);
    std::shuffle(disks.begin(), disks.end(), rng);
    const MinStabResult b = smallest_intersecting_disk(disks, {}, 3);
    EXPECT_LT(distance(a.dstar.center, b.dstar.center), 1e-9);
    EXPECT_NEAR(a.dstar.radius, b.dstar.radius, 1e-9);
  }
}

TEST(SmallestIntersectingDiskProperty, SimilarityCovariance) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenProfile p{ProfileName::MixedRadii, 25, seed, 1.0, std::nullopt};
    const auto disks = gen_instance(p);
    const Similarity t{0.1 * static_cast<double>(seed), 0.5 + 0.1 * static_cast<double>(seed),
                       {3, -1}, seed % 2 == 1};
    std::vector<Disk> moved;
    for (const Disk& d : disks) moved.push_back(apply(t, d));
    const MinStabResult a = smallest_intersecting_disk(disks);
    const MinStabResult b = smallest_intersecting_disk(moved);
    EXPECT_NEAR(b.dstar.radius, t.scale * a.dstar.radius, 1e-8 * (1 + b.dstar.radius));
    EXPECT_LT(distance(b.dstar.center, apply(t, a.dstar.center)), 1e-8 * (1 + norm(b.dstar.center)));
  }
}
