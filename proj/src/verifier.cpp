#include "dstab/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "dstab/rng.hpp"

namespace dstab {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DisjointPair: return "disjoint_pair";
    case ViolationKind::Unstabbed: return "unstabbed";
    case ViolationKind::DstarMissesDisk: return "dstar_misses_disk";
    case ViolationKind::SmallerDiskFound: return "smaller_disk_found";
    case ViolationKind::ConstantMismatch: return "constant_mismatch";
    case ViolationKind::BoundViolated: return "bound_violated";
  }
  return "unknown";
}

void VerifyReport::add(Violation v) {
  ok = false;
  violations.push_back(std::move(v));
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const Violation& v : other.violations) add(v);
  for (const auto& [name, count] : other.checked) checked[name] += count;
}

namespace {

double pair_gap(const Disk& a, const Disk& b) {
  return distance(a.center, b.center) - a.radius - b.radius;
}

void check_pair(const std::span<const Disk> disks, std::size_t i, std::size_t j,
                const Tolerance& tol, VerifyReport& report) {
  const double gap = pair_gap(disks[i], disks[j]);
  const double slack = tol.slack(norm(disks[i].center) + norm(disks[j].center) +
                                 disks[i].radius + disks[j].radius);
  if (gap > slack) report.add({ViolationKind::DisjointPair, {i, j}, gap, {}});
}

}  // namespace

VerifyReport verify_pairwise(std::span<const Disk> disks, const Tolerance& tol,
                             std::optional<std::size_t> max_pairs, std::uint64_t seed) {
  VerifyReport report;
  const std::size_t n = disks.size();
  const std::size_t all_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::size_t count = 0;
  if (!max_pairs || *max_pairs >= all_pairs) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) check_pair(disks, i, j, tol, report);
    }
    count = all_pairs;
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) check_pair(disks, i, i + 1, tol, report);
    count = n - 1;
    Rng rng(Rng::mix(seed, 0x70616972));
    for (std::size_t k = 0; k < *max_pairs; ++k) {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      check_pair(disks, std::min(i, j), std::max(i, j), tol, report);
      ++count;
    }
  }
  report.checked["pairs"] += count;
  return report;
}

VerifyReport verify_stabbing(std::span<const Disk> disks, std::span<const Point> points,
                             const Tolerance& tol, double unit) {
  VerifyReport report;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Disk& d = disks[i];
    const double slack = tol.eps_abs * unit + tol.eps_rel * (norm(d.center) + d.radius);
    double best = std::numeric_limits<double>::infinity();
    for (Point p : points) best = std::min(best, distance(p, d.center) - d.radius);
    if (!(best <= slack)) report.add({ViolationKind::Unstabbed, {i}, best, {}});
  }
  report.checked["disks"] += disks.size();
  return report;
}

VerifyReport verify_stabbing(std::span<const Disk> disks, const StabResult& result,
                             const Tolerance& tol) {
  const double rstar = result.min_stab.dstar.radius;
  const double unit = result.case_tag == CaseTag::Helly || !(rstar > 0.0) ? 1.0 : rstar;
  return verify_stabbing(disks, result.points, tol, unit);
}

VerifyReport verify_minimality(std::span<const Disk> disks, const MinStabResult& ms,
                               std::size_t trials, std::uint64_t seed, const Tolerance& tol) {
  VerifyReport report;
  const double rstar = ms.dstar.radius;
  const double unit = rstar > 0.0 ? rstar : 1.0;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Disk& d = disks[i];
    const double gap = distance(ms.dstar.center, d.center) - d.radius - rstar;
    const double slack = tol.eps_abs * unit + tol.eps_rel * (norm(d.center) + d.radius);
    if (gap > slack) report.add({ViolationKind::DstarMissesDisk, {i}, gap, {}});
  }
  report.checked["dstar_meets"] += disks.size();
  if (!(rstar > 0.0) || disks.empty()) return report;

  Rng rng(Rng::mix(seed, 0x6d696e));
  const double shrunk = rstar * (1.0 - 1e-4);
  for (std::size_t t = 0; t < trials; ++t) {
    const double reach = rstar * std::pow(10.0, rng.uniform(-6.0, 0.0));
    const double ang = rng.angle();
    const Point c = ms.dstar.center + reach * Point{std::cos(ang), std::sin(ang)};
    const double need = evaluate_objective(c, disks);
    if (!(need > shrunk)) {
      report.add({ViolationKind::SmallerDiskFound, {}, shrunk - need, "trial " + std::to_string(t)});
    }
  }
  report.checked["shrunk_trials"] += trials;
  return report;
}

}  // namespace dstab
