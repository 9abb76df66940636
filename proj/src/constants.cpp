#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "dstab/verifier.hpp"

namespace dstab {
namespace {

using Vec = std::vector<double>;
using System = std::function<Vec(const Vec&)>;

// Gaussian elimination with partial pivoting; `a` is row-major n x n.
Vec solve_linear(std::vector<Vec> a, Vec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    }
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

// Newton's method with a central-difference Jacobian.
Vec newton(const System& f, Vec x) {
  const std::size_t n = x.size();
  for (int iter = 0; iter < 100; ++iter) {
    const Vec fx = f(x);
    std::vector<Vec> jac(n, Vec(n));
    for (std::size_t j = 0; j < n; ++j) {
      const double h = 1e-6 * std::max(1.0, std::fabs(x[j]));
      Vec hi = x, lo = x;
      hi[j] += h;
      lo[j] -= h;
      const Vec fh = f(hi), fl = f(lo);
      for (std::size_t i = 0; i < n; ++i) jac[i][j] = (fh[i] - fl[i]) / (2.0 * h);
    }
    Vec neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -fx[i];
    const Vec step = solve_linear(jac, neg);
    double size = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += step[i];
      size = std::max(size, std::fabs(step[i]));
    }
    if (size < 1e-15) break;
  }
  return x;
}

double sq(double v) { return v * v; }

// Center (a, b) and radius r of a disk tangent to the horizontal line
// y = line_y (from the side given by `below`: r = line_y - b, else
// r = b - line_y) with points u and v on its boundary.
System tangent_through(double line_y, bool below, Point u, Point v) {
  return [=](const Vec& x) {
    const double a = x[0], b = x[1], r = x[2];
    return Vec{below ? r - (line_y - b) : r - (b - line_y), sq(a - u.x) + sq(b - u.y) - sq(r),
               sq(a - v.x) + sq(b - v.y) - sq(r)};
  };
}

void expect(std::vector<ConstantCheck>& out, std::string name, double solved, double expected,
            const char* relation) {
  ConstantCheck c{std::move(name), solved, expected, relation, false};
  if (c.relation == "=") {
    c.ok = std::fabs(solved - expected) <= kConstantTolerance;
  } else if (c.relation == ">") {
    c.ok = solved > expected;
  } else {
    c.ok = solved < expected;
  }
  out.push_back(std::move(c));
}

}  // namespace

std::vector<ConstantCheck> proof_constant_table() {
  std::vector<ConstantCheck> out;
  const double r2 = std::sqrt(2.0);
  const double r6 = std::sqrt(6.0);
  const Point right_peak{0.5 + 2.0 * r6 / 5.0, 0.2};

  // d' through (-2,0) and (0,2), center (-x, x), tangent to the unit disk.
  {
    const Vec s = newton(
        [](const Vec& v) {
          const double x = v[0], r = v[1];
          return Vec{sq(-x) + sq(x - 2.0) - sq(r), 2.0 * sq(x) - sq(r + 1.0)};
        },
        {2.5, 2.5});
    expect(out, "d'.x", s[0], 1.5 + 3.0 / (2.0 * r2), "=");
    expect(out, "d'.r", s[1], 0.5 + 3.0 / r2, "=");
  }
  // d'' through (-2,0), center on y = -x - 2, tangent to y = -1.
  {
    const Vec s = newton(
        [](const Vec& v) {
          const double a = v[0], b = v[1], r = v[2];
          return Vec{b + a + 2.0, sq(a + 2.0) + sq(b) - sq(r), b + 1.0 - r};
        },
        {-4.5, 2.5, 3.5});
    expect(out, "d''.a", s[0], -3.0 - r2, "=");
    expect(out, "d''.b", s[1], 1.0 + r2, "=");
    expect(out, "d''.r", s[2], 2.0 + r2, "=");
  }
  // alpha <= 17: p^l = (-0.5, 0), p^r = (1.5, 0), q+ = (0, 1.7).
  {
    const Vec s = newton(tangent_through(-1.0, false, {-0.5, 0.0}, {0.0, 1.7}), {-2.5, 1.5, 2.5});
    expect(out, "d^{l+}(a17).a", s[0], -27.0 / 34.0 - 3.0 * std::sqrt(471.0 / 5.0) / 17.0, "=");
    expect(out, "d^{l+}(a17).b", s[1], 2919.0 / 2890.0 + 3.0 * std::sqrt(2355.0) / 289.0, "=");
  }
  {
    const Vec s = newton(tangent_through(-1.0, false, {1.5, 0.0}, {0.0, 1.7}), {4.5, 4.0, 5.0});
    expect(out, "d^{r+}(a17).a", s[0], 81.0 / 34.0 + 3.0 * std::sqrt(771.0 / 5.0) / 17.0, "=");
    expect(out, "d^{r+}(a17).b", s[1], 6619.0 / 2890.0 + 9.0 * std::sqrt(3855.0) / 289.0, "=");
  }
  // alpha > 17, y(c) > 0: p^l = (-0.5, 0), q+ = (-0.5, 1.83), q- = (0.5, -2.5).
  {
    const Vec s = newton(tangent_through(-1.0, false, {-0.5, 0.0}, {-0.5, 1.83}), {-2.0, 1.0, 2.0});
    expect(out, "d^{l+}.a", s[0], -0.5 - std::sqrt(283.0) / 10.0, "=");
    expect(out, "d^{l+}.b", s[1], 183.0 / 200.0, "=");
  }
  {
    const Vec s = newton(tangent_through(1.0, true, {-0.5, 0.0}, {0.5, -2.5}), {-3.0, -2.5, 3.5});
    expect(out, "d^{l-}.a", s[0], -0.9 - std::sqrt(203.0 / 2.0) / 5.0, "=");
    expect(out, "d^{l-}.b", s[1], -1.61 - std::sqrt(406.0) / 25.0, "=");
  }
  {
    const Vec s = newton(tangent_through(-1.0, false, right_peak, {-0.5, 1.83}), {6.0, 7.5, 8.5});
    const double k = 46169.0 + 8000.0 * r6;
    const double a = (10075.0 + 5660.0 * r6 + std::sqrt(8490.0 * k)) / 8150.0;
    const double b = (13292307.0 + 3224000.0 * r6 + 960.0 * std::sqrt(1415.0 * k) +
                      400.0 * std::sqrt(8490.0 * k)) /
                     5313800.0;
    expect(out, "d^{r+}.a", s[0], a, "=");
    expect(out, "d^{r+}.b", s[1], b, "=");
    expect(out, "d^{r+}.a bound", s[0], 5.836, ">");
    expect(out, "d^{r+}.b bound", s[1], 7.51, "<");
    expect(out, "d^{r+} misses d*", sq(s[0]) - 4.0 - 4.0 * s[1], 0.0, ">");
  }
  {
    const Vec s = newton(tangent_through(1.0, true, right_peak, {0.5, -2.5}), {3.5, -2.0, 3.0});
    expect(out, "d^{r-}.a", s[0], (27.0 + 28.0 * r6 + 2.0 * std::sqrt(2310.0)) / 54.0, "=");
    expect(out, "d^{r-}.b", s[1], -1393.0 / 972.0 - 8.0 * std::sqrt(385.0) / 243.0, "=");
    expect(out, "d^{r-}.a bound", s[0], 3.52, ">");
    expect(out, "d^{r-}.b bound", s[1], -2.08, ">");
  }
  return out;
}

VerifyReport check_proof_constants() {
  VerifyReport report;
  for (const ConstantCheck& c : proof_constant_table()) {
    report.checked["constants"] += 1;
    if (c.ok) continue;
    const ViolationKind kind =
        c.relation == "=" ? ViolationKind::ConstantMismatch : ViolationKind::BoundViolated;
    report.add({kind, {}, std::fabs(c.solved - c.expected), c.name});
  }
  return report;
}

}  // namespace dstab
