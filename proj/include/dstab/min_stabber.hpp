#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dstab/geom.hpp"

namespace dstab {

/// Smallest disk meeting every input disk, with the input disks that pin it.
struct MinStabResult {
  Disk dstar;
  /// Indices into the input; every basis disk is externally tangent to dstar
  /// (or, when optimal_value <= 0, tight for the inscribed-disk problem).
  std::vector<std::size_t> basis;
  /// min over c of max_i (|c - c_i| - r_i); dstar.radius = max(0, value).
  double optimal_value = 0.0;
  /// Centers were jittered to escape a degenerate (< 3 disk) basis.
  bool perturbed = false;
  /// The pivoting fallback produced the answer.
  bool used_fallback = false;
};

/// max_i (|c - c_i| - r_i). Throws EmptyInput on an empty set.
double evaluate_objective(Point c, std::span<const Disk> disks);

/// Randomized LP-type solve, expected O(n). `seed` fixes the constraint
/// order and any perturbation. Throws EmptyInput on an empty set.
MinStabResult smallest_intersecting_disk(std::span<const Disk> disks,
                                         const Tolerance& tol = {},
                                         std::uint64_t seed = 0);

/// Deterministic pivoting solver (subgradient warm start, then exact basis
/// exchanges on the most violated disk). Used as the fallback path.
MinStabResult smallest_intersecting_disk_pivoting(std::span<const Disk> disks);

/// Largest relative tangency error of the basis:
/// max_k | |c_k - c*| - r_k - value | / max(1, r_k + |value|).
double basis_tangency_error(std::span<const Disk> disks, const MinStabResult& ms);

}  // namespace dstab
