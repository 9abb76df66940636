#include <algorithm>
#include <cmath>
#include <optional>

#include "dstab/error.hpp"
#include "dstab/rng.hpp"
#include "dstab/verifier.hpp"

namespace dstab {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
double angle_about(Point center, Point p) { return std::atan2(p.y - center.y, p.x - center.x); }

[[noreturn]] void exhausted(ObsId id) {
  throw Error(ErrorKind::SamplerExhausted,
              std::string("no valid configuration for ") + to_string(id));
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::HypothesisViolation, what);
}

// Radius grows by a random factor, sometimes not at all so that boundary
// configurations show up.
double inflate(Rng& rng, double radius) {
  const double u = rng.uniform();
  if (u < 0.25) return radius;
  if (u < 0.5) return radius * (1.0 + 1e-3 * rng.uniform());
  return radius * (1.0 + rng.uniform());
}

// ---- setting shared by observations 1-3: l is the x-axis ----

struct StripSetting {
  Point a, b;
  Disk eta;
  bool eta_tangent = false;
};

std::optional<StripSetting> sample_strip(Rng& rng, bool allow_tangent) {
  StripSetting st;
  const double xa = rng.uniform(-3.0, 0.0);
  const double xb = xa + rng.uniform(0.2, 5.0);
  st.a = {xa, 0.0};
  st.b = {xb, 0.0};
  if (allow_tangent && rng.uniform() < 0.3) {
    const double rho = rng.uniform(0.2, 5.0);
    st.eta = {{rng.uniform(xa, xb), -rho}, rho};
    st.eta_tangent = true;
    return st;
  }
  const double depth = rng.uniform(0.1, 6.0);
  const double rho = depth * rng.uniform(0.05, 0.999);
  st.eta = {{rng.uniform(xa - 8.0, xb + 8.0), -depth}, rho};
  const double ex = st.eta.center.x;
  const double gap = ex < xa ? xa - ex : (ex > xb ? ex - xb : 0.0);
  if (gap > rho) return std::nullopt;
  return st;
}

// A point of eta ∩ V.
Point sample_in_eta_strip(Rng& rng, const StripSetting& st) {
  const Disk& e = st.eta;
  const double lo = std::max(st.a.x, e.center.x - e.radius);
  const double hi = std::min(st.b.x, e.center.x + e.radius);
  const double x = rng.uniform(lo, hi);
  const double half = std::sqrt(std::max(0.0, e.radius * e.radius - (x - e.center.x) * (x - e.center.x)));
  return {x, e.center.y + rng.uniform(-half, half)};
}

std::optional<ObservationConfig> sample_obs12(Rng& rng, ObsId id) {
  auto st = sample_strip(rng, true);
  if (!st) return std::nullopt;
  const Point z = sample_in_eta_strip(rng, *st);
  Point c;
  const double y = rng.uniform(0.01, 8.0);
  if (id == ObsId::Obs1) {
    c = {rng.uniform(st->a.x - 6.0, st->b.x + 6.0), y};
  } else if (rng.uniform() < 0.5) {
    c = {st->a.x - rng.uniform(0.0, 6.0), y};
  } else {
    c = {st->b.x + rng.uniform(0.0, 6.0), y};
  }
  ObservationConfig cfg;
  cfg.id = id;
  cfg.a = st->a;
  cfg.b = st->b;
  cfg.eta = st->eta;
  cfg.witness = z;
  cfg.epsilon = Disk{c, inflate(rng, distance(c, z))};
  return cfg;
}

std::optional<ObservationConfig> sample_obs3(Rng& rng) {
  auto st = sample_strip(rng, false);
  if (!st) return std::nullopt;
  const double m = 0.5 * (st->a.x + st->b.x);
  const double h = 0.5 * (st->b.x - st->a.x);
  const Disk& eta = st->eta;
  // disk through a and b with center (m, k), externally tangent to eta
  auto g = [&](double k) {
    return distance({m, k}, eta.center) - std::hypot(h, k) - eta.radius;
  };
  if (!(g(0.0) < 0.0)) return std::nullopt;
  double hi = 1.0;
  while (g(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e6) return std::nullopt;
  }
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) <= 0.0 ? lo : hi) = mid;
  }
  const Disk delta{{m, hi}, std::hypot(h, hi)};

  Disk eps;
  if (rng.uniform() < 0.2) {
    // radius exactly r(delta), tangent to eta, center in V above l
    bool found = false;
    for (int t = 0; t < 64 && !found; ++t) {
      const Point c = eta.center + (delta.radius + eta.radius) * unit(rng.uniform(0.0, std::numbers::pi));
      if (c.y > 0.0 && c.x >= st->a.x && c.x <= st->b.x) {
        eps = {c, delta.radius};
        found = true;
      }
    }
    if (!found) return std::nullopt;
  } else {
    const Point c{rng.uniform(st->a.x, st->b.x), rng.uniform(0.01, 15.0)};
    const double need = std::max(delta.radius, distance(c, eta.center) - eta.radius);
    eps = {c, inflate(rng, need)};
  }
  ObservationConfig cfg;
  cfg.id = ObsId::Obs3Radius;
  cfg.a = st->a;
  cfg.b = st->b;
  cfg.eta = eta;
  cfg.delta = delta;
  cfg.epsilon = eps;
  return cfg;
}

// ---- observation 4: a and b above the x-axis ----

// Centers x of the disks tangent to y = 0 from above through a and b.
std::vector<double> tangent_disk_centers(Point a, Point b) {
  // ((x - xa)^2 + ya^2) / ya = ((x - xb)^2 + yb^2) / yb
  const double qa = b.y - a.y;
  const double qb = -2.0 * (b.y * a.x - a.y * b.x);
  const double qc = b.y * (a.x * a.x + a.y * a.y) - a.y * (b.x * b.x + b.y * b.y);
  if (std::fabs(qa) < 1e-12 * (std::fabs(a.y) + std::fabs(b.y))) return {-qc / qb};
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return {};
  const double root = std::sqrt(disc);
  const double q = -0.5 * (qb + std::copysign(root, qb));
  return {q / qa, qc / q};
}

Disk tangent_disk_at(Point a, double x) {
  const double r = ((x - a.x) * (x - a.x) + a.y * a.y) / (2.0 * a.y);
  return {{x, r}, r};
}

std::optional<ObservationConfig> sample_obs4(Rng& rng) {
  const Point a{rng.uniform(-3.0, 0.0), rng.uniform(0.1, 4.0)};
  const Point b{a.x + rng.uniform(0.2, 5.0), rng.uniform(0.1, 4.0)};
  const auto xs = tangent_disk_centers(a, b);
  if (xs.empty()) return std::nullopt;
  const Disk delta = tangent_disk_at(a, xs[rng.below(xs.size())]);
  const Point c{rng.uniform(a.x, b.x), delta.center.y + rng.uniform(0.0, 10.0)};
  ObservationConfig cfg;
  cfg.id = ObsId::Obs4B;
  cfg.a = a;
  cfg.b = b;
  cfg.delta = delta;
  cfg.epsilon = Disk{c, inflate(rng, c.y)};
  return cfg;
}

// ---- observations 5-7: l is the x-axis, eta crosses it ----

struct BigSetting {
  Disk eta;
  double top = 0.0;  // height of l'
  Disk delta;
  Point p, q, r, s;
  double theta_q = 0.0, theta_r = 0.0;
};

std::optional<BigSetting> sample_big(Rng& rng) {
  BigSetting st;
  const double rho = rng.uniform(0.2, 3.0);
  const double ey = rho * rng.uniform(0.02, 1.0);
  st.eta = {{rng.uniform(-2.0, 2.0), ey}, rho};
  st.top = ey + rho;
  const double big_r = 0.5 * st.top * rng.uniform(1.0, 6.0);
  const double dx = st.eta.center.x - std::sqrt((big_r + rho) * (big_r + rho) - (ey - big_r) * (ey - big_r));
  st.delta = {{dx, big_r}, big_r};
  st.p = {dx, 0.0};
  st.q = st.delta.center + big_r * (st.eta.center - st.delta.center) / distance(st.eta.center, st.delta.center);
  const double lift = st.top - big_r;
  st.r = {dx + std::sqrt(std::max(0.0, big_r * big_r - lift * lift)), st.top};
  st.s = {dx, 2.0 * big_r};
  st.theta_q = angle_about(st.delta.center, st.q);
  st.theta_r = angle_about(st.delta.center, st.r);
  // r = s: the arc from r to s degenerates
  if (!(st.theta_r < kHalfPi - 1e-9)) return std::nullopt;
  return st;
}

Point on_arc(Rng& rng, const Disk& d, double from, double to, Point first, Point last) {
  const double u = rng.uniform();
  if (u < 0.05) return first;
  if (u < 0.1) return last;
  return d.center + d.radius * unit(rng.uniform(from, to));
}

Point upper_left_of(Rng& rng, Point a) {
  const double dx = rng.uniform() < 0.05 ? 0.0 : rng.uniform(0.0, 8.0);
  const double dy = rng.uniform() < 0.05 ? 0.0 : rng.uniform(0.0, 8.0);
  return {a.x - dx, a.y + dy};
}

// Whether the disk enters the open lower-left quadrant of `a`. Eta must stay
// clear of it: with q below delta's center and a near q the conclusion
// fails otherwise.
bool reaches_lower_left(const Disk& d, Point a, double slack) {
  const Point nearest{std::min(d.center.x, a.x), std::min(d.center.y, a.y)};
  return distance(nearest, d.center) < d.radius - slack;
}

struct Tangent {
  Point normal;
  double offset;
};

// Line touching both disks with both below it.
std::optional<Tangent> upper_mutual_tangent(const Disk& u, const Disk& v) {
  const Point d = u.center - v.center;
  const double dist = norm(d);
  if (!(dist > std::fabs(u.radius - v.radius))) return std::nullopt;
  const Point dh = d / dist;
  const Point perp{-dh.y, dh.x};
  const double cs = (v.radius - u.radius) / dist;
  const double sn = std::sqrt(std::max(0.0, 1.0 - cs * cs));
  const Point n1 = cs * dh + sn * perp;
  const Point n2 = cs * dh - sn * perp;
  const Point n = n1.y >= n2.y ? n1 : n2;
  return Tangent{n, dot(n, u.center) + u.radius};
}

// Intersection of the line with the disk boundary having the larger x.
std::optional<Point> right_crossing(const Tangent& t, const Disk& d) {
  const double off = dot(t.normal, d.center) - t.offset;
  if (std::fabs(off) > d.radius) return std::nullopt;
  const Point foot = d.center - off * t.normal;
  const double half = std::sqrt(std::max(0.0, d.radius * d.radius - off * off));
  const Point dir{-t.normal.y, t.normal.x};
  const Point u = foot + half * dir;
  const Point w = foot - half * dir;
  return u.x >= w.x ? u : w;
}

std::optional<ObservationConfig> sample_big_family(Rng& rng, ObsId id) {
  auto st = sample_big(rng);
  if (!st) return std::nullopt;
  ObservationConfig cfg;
  cfg.id = id;
  cfg.eta = st->eta;
  cfg.delta = st->delta;
  cfg.p = st->p;
  cfg.q = st->q;
  cfg.r = st->r;
  cfg.s = st->s;

  double b_from = st->theta_r;
  double b_to = kHalfPi;
  Point b_first = st->r, b_last = st->s;
  if (id == ObsId::Obs7FivePlus) {
    const double g = 0.5 * st->top * rng.uniform(0.01, 0.999);
    const Disk gamma{{st->eta.center.x - rng.uniform(0.05, 10.0), g}, g};
    const auto line = upper_mutual_tangent(st->eta, gamma);
    if (!line) return std::nullopt;
    const auto s = right_crossing(*line, st->delta);
    if (!s) return std::nullopt;
    const double theta_s = angle_about(st->delta.center, *s);
    if (!(theta_s <= st->theta_r)) return std::nullopt;
    cfg.gamma = gamma;
    cfg.s = *s;
    b_from = theta_s;
    b_to = st->theta_r;
    b_first = *s;
    b_last = st->r;
  }
  cfg.a = on_arc(rng, st->delta, -kHalfPi, st->theta_q, st->p, st->q);
  cfg.b = on_arc(rng, st->delta, b_from, b_to, b_first, b_last);
  if (reaches_lower_left(st->eta, cfg.a, 0.0)) return std::nullopt;

  const Point c = upper_left_of(rng, cfg.a);
  double need = c.y;
  if (id == ObsId::Cor6Smaller) {
    const double rho2 = st->eta.radius * rng.uniform(0.01, 1.0);
    const Point e2 = st->eta.center + (st->eta.radius - rho2) * rng.uniform() * unit(rng.angle());
    cfg.eta_prime = Disk{e2, rho2};
    need = std::max(need, distance(c, e2) - rho2);
  } else {
    need = std::max(need, distance(c, st->eta.center) - st->eta.radius);
  }
  if (cfg.gamma) need = std::max(need, distance(c, cfg.gamma->center) - cfg.gamma->radius);
  cfg.epsilon = Disk{c, inflate(rng, need)};
  return cfg;
}

std::optional<ObservationConfig> sample_obs8(Rng& rng) {
  const Point p{0.0, 0.0};
  const Point c = upper_left_of(rng, p);
  const Point z{rng.uniform(0.0, 5.0), -rng.uniform(0.0, 5.0)};
  ObservationConfig cfg;
  cfg.id = ObsId::Obs8Rays;
  cfg.p = p;
  cfg.delta = Disk{c, inflate(rng, distance(c, z))};
  return cfg;
}

// Canonical -> world.
ObservationConfig place(const ObservationConfig& canon, Rng& rng) {
  Similarity w;
  w.rotation = rng.uniform(-std::numbers::pi, std::numbers::pi);
  w.scale = rng.log_uniform(0.1, 10.0);
  w.translation = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
  w.reflect = rng.uniform() < 0.5;
  ObservationConfig out = canon;
  out.to_canonical = invert(w);
  out.a = apply(w, canon.a);
  out.b = apply(w, canon.b);
  for (auto field : {&ObservationConfig::p, &ObservationConfig::q, &ObservationConfig::r,
                     &ObservationConfig::s, &ObservationConfig::witness}) {
    if (canon.*field) out.*field = apply(w, *(canon.*field));
  }
  for (auto field : {&ObservationConfig::eta, &ObservationConfig::eta_prime,
                     &ObservationConfig::delta, &ObservationConfig::epsilon,
                     &ObservationConfig::gamma}) {
    if (canon.*field) out.*field = apply(w, *(canon.*field));
  }
  return out;
}

ObservationConfig canonical(const ObservationConfig& cfg) {
  const Similarity& t = cfg.to_canonical;
  ObservationConfig out = cfg;
  out.to_canonical = Similarity::identity();
  out.a = apply(t, cfg.a);
  out.b = apply(t, cfg.b);
  for (auto field : {&ObservationConfig::p, &ObservationConfig::q, &ObservationConfig::r,
                     &ObservationConfig::s, &ObservationConfig::witness}) {
    if (cfg.*field) out.*field = apply(t, *(cfg.*field));
  }
  for (auto field : {&ObservationConfig::eta, &ObservationConfig::eta_prime,
                     &ObservationConfig::delta, &ObservationConfig::epsilon,
                     &ObservationConfig::gamma}) {
    if (cfg.*field) out.*field = apply(t, *(cfg.*field));
  }
  return out;
}

double magnitude(const ObservationConfig& c) {
  double m = std::max({1.0, norm(c.a), norm(c.b)});
  for (const auto& pt : {c.p, c.q, c.r, c.s, c.witness}) {
    if (pt) m = std::max(m, norm(*pt));
  }
  for (const auto& d : {c.eta, c.eta_prime, c.delta, c.epsilon, c.gamma}) {
    if (d) m = std::max(m, norm(d->center) + d->radius);
  }
  return m;
}

bool within(Point p, const Disk& d, double slack) { return distance(p, d.center) <= d.radius + slack; }

template <typename T>
const T& need(const std::optional<T>& v, const char* what) {
  require(v.has_value(), what);
  return *v;
}

// Angle of `x` around `center` lies on the counterclockwise arc [from, to].
bool on_arc_between(Point center, double radius, Point x, double from, double to, double slack) {
  const double ang_slack = slack / radius;
  const double t = angle_about(center, x);
  return t >= from - ang_slack && t <= to + ang_slack;
}

void check_strip_hypotheses(const ObservationConfig& c, double tl) {
  require(std::fabs(c.a.y) <= tl && std::fabs(c.b.y) <= tl, "a and b must lie on l");
  require(c.a.x < c.b.x, "a must precede b along l");
  const Disk& eta = need(c.eta, "eta missing");
  require(eta.center.y < tl, "eta's center must be below l");
  const double top = eta.center.y + eta.radius;
  const bool disjoint = top < -tl;
  const bool tangent = std::fabs(top) <= tl && eta.center.x >= c.a.x - tl && eta.center.x <= c.b.x + tl;
  require(disjoint || tangent, "eta must miss l or be tangent to segment ab");
  const double ex = eta.center.x;
  const double gap = ex < c.a.x ? c.a.x - ex : (ex > c.b.x ? ex - c.b.x : 0.0);
  require(gap <= eta.radius + tl, "eta must meet V");
}

bool contains_a_or_b(const ObservationConfig& c, const Disk& e, double tl) {
  return within(c.a, e, tl) || within(c.b, e, tl);
}

bool check_obs12(const ObservationConfig& c, double tl) {
  check_strip_hypotheses(c, tl);
  const Disk& eps = need(c.epsilon, "epsilon missing");
  const Point z = need(c.witness, "witness of epsilon ∩ eta ∩ V missing");
  require(eps.center.y > -tl, "epsilon's center must be above l");
  require(within(z, eps, tl) && within(z, *c.eta, tl) && z.x >= c.a.x - tl && z.x <= c.b.x + tl,
          "witness must lie in epsilon, eta and V");
  if (c.id == ObsId::Obs1) {
    return distance_to_segment(eps.center, c.a, c.b) <= eps.radius + tl;
  }
  require(eps.center.x <= c.a.x + tl || eps.center.x >= c.b.x - tl, "epsilon's center must be outside V");
  return contains_a_or_b(c, eps, tl);
}

bool check_obs3(const ObservationConfig& c, double tl) {
  check_strip_hypotheses(c, tl);
  const Disk& eta = *c.eta;
  const Disk& delta = need(c.delta, "delta missing");
  const Disk& eps = need(c.epsilon, "epsilon missing");
  require(std::fabs(distance(delta.center, c.a) - delta.radius) <= tl &&
              std::fabs(distance(delta.center, c.b) - delta.radius) <= tl,
          "delta must pass through a and b");
  const double dd = distance(delta.center, eta.center);
  require(std::fabs(dd - delta.radius - eta.radius) <= tl ||
              std::fabs(dd - std::fabs(delta.radius - eta.radius)) <= tl,
          "delta must be tangent to eta");
  require(eps.center.y > -tl && eps.center.x >= c.a.x - tl && eps.center.x <= c.b.x + tl,
          "epsilon's center must be in V above l");
  require(eps.radius >= delta.radius - tl, "epsilon must be at least as large as delta");
  require(distance(eps.center, eta.center) <= eps.radius + eta.radius + tl, "epsilon must meet eta");
  return contains_a_or_b(c, eps, tl);
}

bool check_obs4(const ObservationConfig& c, double tl) {
  require(c.a.y > -tl && c.b.y > -tl, "a and b must be above l");
  require(c.a.x < c.b.x, "a must be left of b");
  const Disk& delta = need(c.delta, "delta missing");
  const Disk& eps = need(c.epsilon, "epsilon missing");
  require(std::fabs(delta.center.y - delta.radius) <= tl, "delta must be tangent to l from above");
  require(std::fabs(distance(delta.center, c.a) - delta.radius) <= tl &&
              std::fabs(distance(delta.center, c.b) - delta.radius) <= tl,
          "delta must pass through a and b");
  require(eps.center.x >= c.a.x - tl && eps.center.x <= c.b.x + tl, "epsilon's center must be in V");
  require(eps.center.y >= delta.center.y - tl, "epsilon's center must be above delta's");
  require(std::fabs(eps.center.y) <= eps.radius + tl, "epsilon must meet l");
  return contains_a_or_b(c, eps, tl);
}

bool check_big_family(const ObservationConfig& c, double tl) {
  const Disk& eta = need(c.eta, "eta missing");
  const Disk& delta = need(c.delta, "delta missing");
  const Disk& eps = need(c.epsilon, "epsilon missing");
  const Point p = need(c.p, "p missing");
  const Point q = need(c.q, "q missing");
  const Point r = need(c.r, "r missing");
  const Point s = need(c.s, "s missing");
  require(eta.center.y > -tl && eta.center.y - eta.radius <= tl,
          "eta must meet l with its center above l");
  const double top = eta.center.y + eta.radius;
  require(std::fabs(delta.center.y - delta.radius) <= tl, "delta must be tangent to l from above");
  require(std::fabs(distance(delta.center, eta.center) - delta.radius - eta.radius) <= tl &&
              delta.center.x < eta.center.x + tl,
          "delta must be tangent to eta from the left");
  require(2.0 * delta.radius >= top - tl, "delta must meet l'");
  require(distance(p, {delta.center.x, 0.0}) <= tl, "p must be the tangency point with l");
  const Point q_expect = delta.center + delta.radius * (eta.center - delta.center) /
                                            distance(eta.center, delta.center);
  require(distance(q, q_expect) <= tl, "q must be the tangency point with eta");
  require(std::fabs(r.y - top) <= tl && std::fabs(distance(r, delta.center) - delta.radius) <= tl &&
              r.x >= delta.center.x - tl,
          "r must be on l' and the right boundary of delta");

  const double theta_q = angle_about(delta.center, q);
  const double theta_r = angle_about(delta.center, r);
  auto on_delta = [&](Point x) { return std::fabs(distance(x, delta.center) - delta.radius) <= tl; };
  require(on_delta(c.a) && on_arc_between(delta.center, delta.radius, c.a, -kHalfPi, theta_q, tl),
          "a must be on the arc from p to q");
  require(!reaches_lower_left(eta, c.a, tl), "eta must stay out of the lower-left quadrant of a");

  if (c.id == ObsId::Obs7FivePlus) {
    const Disk& gamma = need(c.gamma, "gamma missing");
    require(std::fabs(gamma.center.y - gamma.radius) <= tl && gamma.radius > 0.0,
            "gamma must be tangent to l from above");
    require(2.0 * gamma.radius <= top + tl, "gamma must not cross l'");
    require(gamma.center.x < eta.center.x + tl, "gamma's center must be left of eta");
    const auto line = upper_mutual_tangent(eta, gamma);
    require(line.has_value(), "eta and gamma need an upper mutual tangent");
    const auto s_expect = right_crossing(*line, delta);
    require(s_expect && distance(*s_expect, s) <= tl, "s must be delta's right crossing of the tangent");
    const double theta_s = angle_about(delta.center, s);
    require(on_delta(c.b) && on_arc_between(delta.center, delta.radius, c.b, theta_s, theta_r, tl),
            "b must be on the arc from s to r");
    require(distance(eps.center, gamma.center) <= eps.radius + gamma.radius + tl, "epsilon must meet gamma");
  } else {
    require(distance(s, {delta.center.x, delta.center.y + delta.radius}) <= tl,
            "s must be the highest point of delta");
    require(on_delta(c.b) && on_arc_between(delta.center, delta.radius, c.b, theta_r, kHalfPi, tl),
            "b must be on the arc from r to s");
  }

  require(eps.center.x <= c.a.x + tl && eps.center.y >= c.a.y - tl,
          "epsilon's center must be in the upper-left quadrant of a");
  require(eps.center.y <= eps.radius + tl, "epsilon must meet l");
  if (c.id == ObsId::Cor6Smaller) {
    const Disk& inner = need(c.eta_prime, "eta' missing");
    require(distance(inner.center, eta.center) + inner.radius <= eta.radius + tl, "eta' must lie in eta");
    require(distance(eps.center, inner.center) <= eps.radius + inner.radius + tl, "epsilon must meet eta'");
  } else {
    require(distance(eps.center, eta.center) <= eps.radius + eta.radius + tl, "epsilon must meet eta");
  }
  return contains_a_or_b(c, eps, tl);
}

bool check_obs8(const ObservationConfig& c, double tl) {
  const Point p = need(c.p, "p missing");
  const Disk& delta = need(c.delta, "delta missing");
  const Point cc = delta.center;
  require(cc.x <= p.x + tl && cc.y >= p.y - tl, "delta's center must be in the upper-left quadrant of p");
  const Point nearest{std::max(cc.x, p.x), std::min(cc.y, p.y)};
  require(within(nearest, delta, tl), "delta must meet the lower-right quadrant of p");
  return within(p, delta, tl);
}

}  // namespace

const char* to_string(ObsId id) {
  switch (id) {
    case ObsId::Obs1: return "OBS1";
    case ObsId::Obs2OutsideStrip: return "OBS2_OUTSIDE_STRIP";
    case ObsId::Obs3Radius: return "OBS3_RADIUS";
    case ObsId::Obs4B: return "OBS4_B";
    case ObsId::Obs5Big: return "OBS5_BIG";
    case ObsId::Cor6Smaller: return "COR6_SMALLER";
    case ObsId::Obs7FivePlus: return "OBS7_5PLUS";
    case ObsId::Obs8Rays: return "OBS8_RAYS";
  }
  return "UNKNOWN";
}

ObservationConfig sample_observation(ObsId id, std::uint64_t seed) {
  Rng rng(Rng::mix(seed, 0x6f6273 + static_cast<std::uint64_t>(id)));
  for (std::size_t attempt = 0; attempt < kSamplerAttempts; ++attempt) {
    std::optional<ObservationConfig> canon;
    switch (id) {
      case ObsId::Obs1:
      case ObsId::Obs2OutsideStrip: canon = sample_obs12(rng, id); break;
      case ObsId::Obs3Radius: canon = sample_obs3(rng); break;
      case ObsId::Obs4B: canon = sample_obs4(rng); break;
      case ObsId::Obs5Big:
      case ObsId::Cor6Smaller:
      case ObsId::Obs7FivePlus: canon = sample_big_family(rng, id); break;
      case ObsId::Obs8Rays: canon = sample_obs8(rng); break;
    }
    if (canon) return place(*canon, rng);
  }
  exhausted(id);
}

bool check_observation(const ObservationConfig& cfg, const Tolerance& tol) {
  const ObservationConfig c = canonical(cfg);
  const double tl = tol.eps_abs * magnitude(c);
  switch (c.id) {
    case ObsId::Obs1:
    case ObsId::Obs2OutsideStrip: return check_obs12(c, tl);
    case ObsId::Obs3Radius: return check_obs3(c, tl);
    case ObsId::Obs4B: return check_obs4(c, tl);
    case ObsId::Obs5Big:
    case ObsId::Cor6Smaller:
    case ObsId::Obs7FivePlus: return check_big_family(c, tl);
    case ObsId::Obs8Rays: return check_obs8(c, tl);
  }
  return false;
}

}  // namespace dstab
