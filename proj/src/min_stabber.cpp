#include "dstab/min_stabber.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <limits>
#include <numeric>

#include "dstab/error.hpp"
#include "dstab/rng.hpp"

namespace dstab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxDepth = 4096;

struct DepthExceeded {};

// A point where the constraints in `ids` are all tight:
// |c - c_k| = r_k + t for k in ids.
struct Candidate {
  Point c;
  double t = kInf;
  std::array<std::size_t, 3> ids{};
  int size = 0;
  bool kkt = false;

  bool contains(std::size_t i) const {
    for (int k = 0; k < size; ++k) {
      if (ids[k] == i) return true;
    }
    return false;
  }
};

// Works in coordinates centered on the bounding box so that tolerances can be
// expressed relative to the instance extent.
class Problem {
 public:
  explicit Problem(std::span<const Disk> disks) : disks_(disks) {
    double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf, max_r = 0.0;
    for (const Disk& d : disks_) {
      lo_x = std::min(lo_x, d.center.x);
      hi_x = std::max(hi_x, d.center.x);
      lo_y = std::min(lo_y, d.center.y);
      hi_y = std::max(hi_y, d.center.y);
      max_r = std::max(max_r, d.radius);
    }
    origin_ = {0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)};
    extent_ = std::hypot(hi_x - lo_x, hi_y - lo_y);
    scale_ = std::max({extent_, max_r, std::fabs(origin_.x), std::fabs(origin_.y),
                       std::numeric_limits<double>::min()});
    eps_ = 64.0 * DBL_EPSILON * scale_;
  }

  std::size_t size() const { return disks_.size(); }
  Point origin() const { return origin_; }
  double extent() const { return extent_; }
  double eps() const { return eps_; }
  Point center(std::size_t i) const { return disks_[i].center - origin_; }
  double radius(std::size_t i) const { return disks_[i].radius; }

  double excess(std::size_t i, const Candidate& b) const {
    return distance(b.c, center(i)) - radius(i) - b.t;
  }
  bool violates(std::size_t i, const Candidate& b) const { return excess(i, b) > eps_; }

  Candidate single(std::size_t i) const {
    Candidate cand;
    cand.c = center(i);
    cand.t = -radius(i);
    cand.ids[0] = i;
    cand.size = 1;
    cand.kkt = true;
    return cand;
  }

  // Minimizer over {i, j} when both are tight; invalid when one disk swallows
  // the other (then a single constraint decides).
  bool pair(std::size_t i, std::size_t j, Candidate& out) const {
    const Point ci = center(i);
    const Point cj = center(j);
    const double dist = distance(ci, cj);
    if (!(dist > 0.0)) return false;
    const double t = 0.5 * (dist - radius(i) - radius(j));
    const double reach_i = radius(i) + t;
    const double reach_j = radius(j) + t;
    if (reach_i < 0.0 || reach_j < 0.0) return false;
    out.c = ci + (reach_i / dist) * (cj - ci);
    out.t = t;
    out.ids = {std::min(i, j), std::max(i, j), 0};
    out.size = 2;
    out.kkt = true;
    return true;
  }

  // Points tight for three constraints: subtracting the squared equations
  // leaves c affine in t, and the first equation becomes a quadratic in t.
  int triple(std::size_t i, std::size_t j, std::size_t k, std::array<Candidate, 2>& out) const {
    const Point base = center(i);
    const Point p2 = center(j) - base;
    const Point p3 = center(k) - base;
    const double r1 = radius(i), r2 = radius(j), r3 = radius(k);
    const double det = 4.0 * cross(p2, p3);
    if (std::fabs(det) <= 1e-13 * 4.0 * norm(p2) * norm(p3)) return 0;

    const double u2 = dot(p2, p2) - r2 * r2 + r1 * r1;
    const double u3 = dot(p3, p3) - r3 * r3 + r1 * r1;
    const double v2 = -2.0 * (r2 - r1);
    const double v3 = -2.0 * (r3 - r1);
    // [2 p2; 2 p3] c = u + t v
    auto solve2 = [&](double b2, double b3) {
      return Point{(b2 * 2.0 * p3.y - b3 * 2.0 * p2.y) / det,
                   (2.0 * p2.x * b3 - 2.0 * p3.x * b2) / det};
    };
    const Point P = solve2(u2, u3);
    const Point Q = solve2(v2, v3);

    const double qa = dot(Q, Q) - 1.0;
    const double qb = 2.0 * (dot(P, Q) - r1);
    const double qc = dot(P, P) - r1 * r1;
    std::array<double, 2> roots{};
    int nroots = 0;
    if (std::fabs(qa) <= 1e-14 * (std::fabs(qb) + std::fabs(qc) + 1.0)) {
      if (qb != 0.0) roots[nroots++] = -qc / qb;
    } else {
      double disc = qb * qb - 4.0 * qa * qc;
      if (disc < 0.0) {
        if (disc < -1e-12 * qb * qb) return 0;
        disc = 0.0;
      }
      const double sq = std::sqrt(disc);
      const double q = -0.5 * (qb + std::copysign(sq, qb));
      if (q != 0.0) {
        roots[nroots++] = qc / q;
        roots[nroots++] = q / qa;
      } else {
        roots[nroots++] = 0.0;
      }
    }

    int count = 0;
    for (int r = 0; r < nroots; ++r) {
      const double t = roots[r];
      if (!std::isfinite(t)) continue;
      const double slack = 1e-12 * scale_;
      if (r1 + t < -slack || r2 + t < -slack || r3 + t < -slack) continue;
      Candidate cand;
      cand.c = base + P + t * Q;
      cand.t = t;
      std::array<std::size_t, 3> ids{i, j, k};
      std::sort(ids.begin(), ids.end());
      cand.ids = ids;
      cand.size = 3;
      if (!polish(cand)) continue;
      cand.kkt = origin_in_gradient_hull(cand);
      out[count++] = cand;
    }
    return count;
  }

  // Exact optimum over a handful of constraints by enumerating every subset
  // of size <= 3. Feasible candidates satisfying the optimality condition win;
  // near-ties go to the smaller basis, then to the lexicographically smaller
  // index set.
  Candidate solve_small(std::span<const std::size_t> ids) const {
    Candidate best;
    bool have_best = false;
    Candidate least_bad;
    double least_bad_violation = kInf;

    auto consider = [&](const Candidate& cand) {
      double worst = -kInf;
      for (std::size_t m : ids) worst = std::max(worst, excess(m, cand));
      if (worst > eps_) {
        if (worst < least_bad_violation) {
          least_bad_violation = worst;
          least_bad = cand;
        }
        return;
      }
      if (!have_best || better(cand, best)) {
        best = cand;
        have_best = true;
      }
    };

    const std::size_t n = ids.size();
    for (std::size_t a = 0; a < n; ++a) {
      consider(single(ids[a]));
      for (std::size_t b = a + 1; b < n; ++b) {
        if (ids[a] == ids[b]) continue;
        Candidate two;
        if (pair(ids[a], ids[b], two)) consider(two);
        for (std::size_t c = b + 1; c < n; ++c) {
          if (ids[c] == ids[a] || ids[c] == ids[b]) continue;
          std::array<Candidate, 2> three;
          const int found = triple(ids[a], ids[b], ids[c], three);
          for (int f = 0; f < found; ++f) consider(three[f]);
        }
      }
    }
    return have_best ? best : least_bad;
  }

  // Matousek-Sharir-Welzl recursion, unrolled over the random order: `basis`
  // is a basis of its own members, and the call returns a basis of
  // basis ∪ extras ∪ prefix. A violator joins the basis and everything
  // processed before it is re-checked against the new basis.
  Candidate run(std::span<const std::size_t> prefix, const std::vector<std::size_t>& extras,
                const Candidate& basis, int depth) const {
    if (depth > kMaxDepth) throw DepthExceeded{};
    Candidate current = basis;

    auto recurse = [&](std::size_t violator, std::span<const std::size_t> new_prefix,
                       std::size_t extras_seen) {
      std::array<std::size_t, 4> ids{};
      std::size_t m = 0;
      for (int k = 0; k < current.size; ++k) ids[m++] = current.ids[k];
      ids[m++] = violator;
      const Candidate next = solve_small(std::span<const std::size_t>(ids.data(), m));
      std::vector<std::size_t> next_extras;
      next_extras.reserve(basis.size + extras_seen);
      for (int k = 0; k < basis.size; ++k) {
        if (!next.contains(basis.ids[k])) next_extras.push_back(basis.ids[k]);
      }
      for (std::size_t e = 0; e < extras_seen; ++e) {
        if (!next.contains(extras[e])) next_extras.push_back(extras[e]);
      }
      current = run(new_prefix, next_extras, next, depth + 1);
    };

    for (std::size_t e = 0; e < extras.size(); ++e) {
      const std::size_t h = extras[e];
      if (current.contains(h) || !violates(h, current)) continue;
      recurse(h, {}, e);
    }
    for (std::size_t j = 0; j < prefix.size(); ++j) {
      const std::size_t h = prefix[j];
      if (current.contains(h) || !violates(h, current)) continue;
      recurse(h, prefix.subspan(0, j), extras.size());
    }
    return current;
  }

  double max_excess(const Candidate& b, std::size_t* argmax = nullptr) const {
    double worst = -kInf;
    for (std::size_t i = 0; i < disks_.size(); ++i) {
      const double e = excess(i, b);
      if (e > worst) {
        worst = e;
        if (argmax) *argmax = i;
      }
    }
    return worst;
  }

  MinStabResult to_result(const Candidate& b) const {
    MinStabResult out;
    out.optimal_value = b.t;
    out.dstar = {b.c + origin_, std::max(0.0, b.t)};
    out.basis.assign(b.ids.begin(), b.ids.begin() + b.size);
    return out;
  }

 private:
  bool better(const Candidate& a, const Candidate& b) const {
    if (a.kkt != b.kkt) return a.kkt;
    if (a.t < b.t - eps_) return true;
    if (a.t > b.t + eps_) return false;
    if (a.size != b.size) return a.size < b.size;
    return std::lexicographical_compare(a.ids.begin(), a.ids.begin() + a.size, b.ids.begin(),
                                        b.ids.begin() + b.size);
  }

  // Two Newton steps on F_k(c, t) = |c - c_k| - r_k - t.
  bool polish(Candidate& cand) const {
    for (int iter = 0; iter < 2; ++iter) {
      std::array<Point, 3> g{};
      std::array<double, 3> f{};
      for (int k = 0; k < 3; ++k) {
        const Point d = cand.c - center(cand.ids[k]);
        const double len = norm(d);
        if (!(len > 0.0)) return iter > 0;
        g[k] = d / len;
        f[k] = len - radius(cand.ids[k]) - cand.t;
      }
      // rows (g_kx, g_ky, -1); solve J * delta = -f by Cramer's rule
      auto det3 = [](const std::array<std::array<double, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      };
      std::array<std::array<double, 3>, 3> jac{};
      for (int k = 0; k < 3; ++k) jac[k] = {g[k].x, g[k].y, -1.0};
      const double d = det3(jac);
      if (std::fabs(d) < 1e-12) return true;
      std::array<double, 3> delta{};
      for (int col = 0; col < 3; ++col) {
        auto m = jac;
        for (int k = 0; k < 3; ++k) m[k][col] = -f[k];
        delta[col] = det3(m) / d;
      }
      cand.c = cand.c + Point{delta[0], delta[1]};
      cand.t += delta[2];
    }
    return std::isfinite(cand.c.x) && std::isfinite(cand.c.y) && std::isfinite(cand.t);
  }

  bool origin_in_gradient_hull(const Candidate& cand) const {
    std::array<Point, 3> u{};
    for (int k = 0; k < 3; ++k) {
      const Point d = center(cand.ids[k]) - cand.c;
      const double len = norm(d);
      if (!(len > 0.0)) return false;
      u[k] = d / len;
    }
    const double s0 = cross(u[1] - u[0], -u[0]);
    const double s1 = cross(u[2] - u[1], -u[1]);
    const double s2 = cross(u[0] - u[2], -u[2]);
    constexpr double slack = 1e-9;
    const bool nonneg = s0 >= -slack && s1 >= -slack && s2 >= -slack;
    const bool nonpos = s0 <= slack && s1 <= slack && s2 <= slack;
    return nonneg || nonpos;
  }

  std::span<const Disk> disks_;
  Point origin_;
  double extent_ = 0.0;
  double scale_ = 1.0;
  double eps_ = 0.0;
};

MinStabResult pivoting(const Problem& prob) {
  const std::size_t n = prob.size();
  // Subgradient warm start on the convex objective.
  Point c{};
  for (std::size_t i = 0; i < n; ++i) c = c + prob.center(i) / static_cast<double>(n);
  const double step0 = std::max(prob.extent(), prob.eps());
  std::size_t worst = 0;
  for (int k = 0; k < 64; ++k) {
    double value = -kInf;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = distance(c, prob.center(i)) - prob.radius(i);
      if (v > value) {
        value = v;
        worst = i;
      }
    }
    const Point d = c - prob.center(worst);
    const double len = norm(d);
    if (!(len > 0.0)) break;
    c = c - (step0 / (k + 2)) * (d / len);
  }

  Candidate b = prob.single(worst);
  for (std::size_t iter = 0; iter < 100000; ++iter) {
    std::size_t violator = 0;
    if (prob.max_excess(b, &violator) <= prob.eps()) break;
    std::array<std::size_t, 4> ids{};
    std::size_t m = 0;
    for (int k = 0; k < b.size; ++k) ids[m++] = b.ids[k];
    ids[m++] = violator;
    b = prob.solve_small(std::span<const std::size_t>(ids.data(), m));
  }
  MinStabResult out = prob.to_result(b);
  out.used_fallback = true;
  return out;
}

MinStabResult solve_once(std::span<const Disk> disks, std::uint64_t seed) {
  const Problem prob(disks);
  std::vector<std::size_t> order(disks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(order.begin(), order.end());

  try {
    const Candidate start = prob.single(order.front());
    const Candidate b = prob.run(order, {}, start, 0);
    MinStabResult out = prob.to_result(b);
    if (prob.max_excess(b) <= 16.0 * prob.eps() &&
        basis_tangency_error(disks, out) <= 1e-7) {
      return out;
    }
  } catch (const DepthExceeded&) {
  }
  return pivoting(prob);
}

}  // namespace

double evaluate_objective(Point c, std::span<const Disk> disks) {
  if (disks.empty()) throw Error(ErrorKind::EmptyInput, "objective of an empty disk set");
  double value = -kInf;
  for (const Disk& d : disks) value = std::max(value, distance(c, d.center) - d.radius);
  return value;
}

double basis_tangency_error(std::span<const Disk> disks, const MinStabResult& ms) {
  double worst = 0.0;
  for (std::size_t i : ms.basis) {
    const Disk& d = disks[i];
    const double gap = distance(d.center, ms.dstar.center) - d.radius - ms.optimal_value;
    worst = std::max(worst, std::fabs(gap) / std::max(1.0, d.radius + std::fabs(ms.optimal_value)));
  }
  return worst;
}

MinStabResult smallest_intersecting_disk_pivoting(std::span<const Disk> disks) {
  if (disks.empty()) throw Error(ErrorKind::EmptyInput, "smallest intersecting disk of an empty set");
  return pivoting(Problem(disks));
}

MinStabResult smallest_intersecting_disk(std::span<const Disk> disks, const Tolerance& tol,
                                         std::uint64_t seed) {
  if (disks.empty()) throw Error(ErrorKind::EmptyInput, "smallest intersecting disk of an empty set");
  MinStabResult out = solve_once(disks, seed);
  if (out.basis.size() >= 3 || out.optimal_value <= tol.eps_abs) return out;

  // Fewer than three tangent disks with a positive radius: jitter the centers
  // and re-solve so that a three-disk basis appears.
  double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
  for (const Disk& d : disks) {
    lo_x = std::min(lo_x, d.center.x - d.radius);
    hi_x = std::max(hi_x, d.center.x + d.radius);
    lo_y = std::min(lo_y, d.center.y - d.radius);
    hi_y = std::max(hi_y, d.center.y + d.radius);
  }
  const double magnitude = 1e-9 * std::hypot(hi_x - lo_x, hi_y - lo_y);
  Rng rng(Rng::mix(seed, 0x7065727475726221ULL));
  std::vector<Disk> jittered(disks.begin(), disks.end());
  for (Disk& d : jittered) {
    const double a = rng.angle();
    d.center = d.center + magnitude * Point{std::cos(a), std::sin(a)};
  }
  MinStabResult again = solve_once(jittered, seed);
  if (again.basis.size() <= out.basis.size()) return out;
  again.perturbed = true;
  return again;
}

}  // namespace dstab
