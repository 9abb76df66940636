#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dstab/geom.hpp"
#include "dstab/min_stabber.hpp"
#include "dstab/stabbing.hpp"

namespace dstab {

enum class ViolationKind {
  DisjointPair,
  Unstabbed,
  DstarMissesDisk,
  SmallerDiskFound,
  ConstantMismatch,
  BoundViolated,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;
  /// How far the check failed by: gap between disks, distance outside a
  /// disk, or the constant's error.
  double magnitude = 0.0;
  std::string note;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
  /// Number of elementary checks performed, per check name.
  std::map<std::string, std::size_t> checked;

  void add(Violation v);
  /// Appends another report's violations and counts.
  void merge(const VerifyReport& other);
};

/// Every disjoint pair. With `max_pairs` set and fewer than n(n-1)/2 pairs
/// allowed, checks that many random pairs plus each disk against its
/// neighbor in input order.
VerifyReport verify_pairwise(std::span<const Disk> disks, const Tolerance& tol = {},
                             std::optional<std::size_t> max_pairs = std::nullopt,
                             std::uint64_t seed = 0);

/// Lists every disk containing none of `points`. A point counts when it is
/// within tol.eps_abs * unit + tol.eps_rel * (|center| + radius) of the disk.
VerifyReport verify_stabbing(std::span<const Disk> disks, std::span<const Point> points,
                             const Tolerance& tol = {}, double unit = 1.0);

/// Same check with eps_abs read in the result's frame units (r* when d* has
/// positive radius, input units otherwise).
VerifyReport verify_stabbing(std::span<const Disk> disks, const StabResult& result,
                             const Tolerance& tol = {});

/// Checks that ms.dstar meets every disk and that `trials` randomly moved
/// centers with radius r*(1 - 1e-4) each miss some disk.
VerifyReport verify_minimality(std::span<const Disk> disks, const MinStabResult& ms,
                               std::size_t trials = 64, std::uint64_t seed = 0,
                               const Tolerance& tol = {});

enum class ObsId {
  Obs1,
  Obs2OutsideStrip,
  Obs3Radius,
  Obs4B,
  Obs5Big,
  Cor6Smaller,
  Obs7FivePlus,
  Obs8Rays,
};

inline constexpr ObsId kAllObsIds[] = {ObsId::Obs1,         ObsId::Obs2OutsideStrip,
                                       ObsId::Obs3Radius,   ObsId::Obs4B,
                                       ObsId::Obs5Big,      ObsId::Cor6Smaller,
                                       ObsId::Obs7FivePlus, ObsId::Obs8Rays};

/// "OBS1", "OBS2_OUTSIDE_STRIP", ...
const char* to_string(ObsId id);

/// One sampled configuration. Objects are stored in world coordinates;
/// `to_canonical` maps them to the setting in which the hypotheses are
/// phrased: the line l is the x-axis, "above" means y > 0, a precedes b,
/// and quadrants are axis-aligned.
///
/// Fields used per observation:
///   OBS1/2/3: a, b (on l), eta, epsilon; OBS1/2 also `witness`, a point of
///             epsilon ∩ eta ∩ V; OBS3 also delta.
///   OBS4:     a, b (above l), delta, epsilon.
///   OBS5/COR6/OBS7: eta, delta, p, q, r, s, a, b, epsilon; COR6 adds
///             eta_prime, OBS7 adds gamma.
///   OBS8:     p, delta.
struct ObservationConfig {
  ObsId id = ObsId::Obs1;
  Similarity to_canonical;
  Point a, b;
  std::optional<Point> p, q, r, s;
  std::optional<Point> witness;
  std::optional<Disk> eta, eta_prime, delta, epsilon, gamma;
};

/// Constructive sampler; rejection (at most 10^4 tries) only for the
/// inequality hypotheses. Throws SamplerExhausted.
ObservationConfig sample_observation(ObsId id, std::uint64_t seed);

/// Re-validates the hypotheses (HypothesisViolation if they fail) and
/// returns whether the conclusion holds.
bool check_observation(const ObservationConfig& cfg, const Tolerance& tol = {});

inline constexpr std::size_t kSamplerAttempts = 10'000;

/// A solved constant next to the value it should match.
struct ConstantCheck {
  std::string name;
  double solved = 0.0;
  double expected = 0.0;
  /// "=" (within 1e-9), ">" or "<".
  std::string relation;
  bool ok = false;
};

/// Re-solves the small tangency systems with Newton's method from rough
/// starting points and compares them to their closed forms and bounds.
std::vector<ConstantCheck> proof_constant_table();
VerifyReport check_proof_constants();

inline constexpr double kConstantTolerance = 1e-9;

}  // namespace dstab
