#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cli.hpp"
#include "dstab/instances.hpp"

namespace dstab::cli {
namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Point p, double pad = 0.0) {
    x0 = std::min(x0, p.x - pad);
    y0 = std::min(y0, p.y - pad);
    x1 = std::max(x1, p.x + pad);
    y1 = std::max(y1, p.y + pad);
  }
  bool empty() const { return !(x0 <= x1); }
};

std::string num(double v) { return format_real(v); }

}  // namespace

std::string render_svg(std::span<const Disk> disks, std::span<const Point> points,
                       const RenderOptions& options) {
  Box box;
  for (const Disk& d : disks) box.add(d.center, d.radius);
  for (Point p : points) box.add(p);
  if (options.dstar) box.add(options.dstar->center, options.dstar->radius);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  double vx = 0.0, vy = 0.0, vw = 1.0, vh = 1.0;
  if (!box.empty()) {
    double w = box.x1 - box.x0;
    double h = box.y1 - box.y0;
    const double side = std::max({w, h, 1e-9});
    w = std::max(w, 1e-9 * side);
    h = std::max(h, 1e-9 * side);
    vx = box.x0 - 0.05 * w;
    vy = -box.y1 - 0.05 * h;
    vw = 1.1 * w;
    vh = 1.1 * h;
  }
  const double stroke = std::max(vw, vh) / 500.0;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(vx) << ' '
      << num(vy) << ' ' << num(vw) << ' ' << num(vh) << "\">\n";
  svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\">\n";
  for (const Disk& d : disks) {
    svg << "<circle cx=\"" << num(d.center.x) << "\" cy=\"" << num(-d.center.y) << "\" r=\""
        << num(d.radius) << "\"/>\n";
  }
  svg << "</g>\n";
  if (options.dstar) {
    const Disk& d = *options.dstar;
    svg << "<circle class=\"dstar\" cx=\"" << num(d.center.x) << "\" cy=\"" << num(-d.center.y)
        << "\" r=\"" << num(d.radius) << "\" fill=\"none\" stroke=\"blue\" stroke-width=\""
        << num(stroke) << "\" stroke-dasharray=\"" << num(4 * stroke) << ' ' << num(3 * stroke)
        << "\"/>\n";
  }
  const double reach = 2.0 * std::hypot(vw, vh);
  const Point mid{vx + vw / 2.0, -(vy + vh / 2.0)};
  for (const Line& l : options.lines) {
    const Point foot = l.closest_point(mid);
    const Point dir{-l.normal().y, l.normal().x};
    const Point a = foot - reach * dir, b = foot + reach * dir;
    svg << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y) << "\" x2=\"" << num(b.x)
        << "\" y2=\"" << num(-b.y) << "\" stroke=\"gray\" stroke-width=\"" << num(stroke)
        << "\"/>\n";
  }
  const double dot_r = std::max(vw, vh) / 120.0;
  for (Point p : points) {
    svg << "<circle class=\"point\" cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\""
        << num(dot_r) << "\" fill=\"red\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dstab::cli
