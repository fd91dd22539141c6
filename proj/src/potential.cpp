#include "dstretch/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dstretch/errors.hpp"

namespace dstretch {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Red iff the arc between the top of `self` (local angle pi/2) and the
// intersection point (local angle `touch_angle`) lies inside the neighbor.
// The connecting arc towards the neighbor is centered on `toward` with the
// intersection point as an endpoint.
struct Coloring {
  ArcColor color;
  bool consistent;
  bool empty;
};

Coloring color_arc(Point center, double radius, Point x_axis, Point y_axis, double touch_angle, bool neighbor_right,
                   const Circle& neighbor) {
  const bool inside_by_angle = neighbor_right ? touch_angle > kHalfPi : touch_angle < kHalfPi;
  const bool empty = touch_angle == kHalfPi;
  bool consistent = true;
  if (!empty) {
    for (double f : {0.25, 0.5, 0.75}) {
      const double ang = kHalfPi + f * (touch_angle - kHalfPi);
      const Point p = center + radius * std::cos(ang) * x_axis + radius * std::sin(ang) * y_axis;
      const bool inside = distance(p, neighbor.center) < neighbor.radius;
      consistent = consistent && inside == inside_by_angle;
    }
  }
  return {inside_by_angle ? ArcColor::red : ArcColor::green, consistent, empty};
}

}  // namespace

PeakDecomposition peak_decomposition(const Circle& prev, const Circle& cur, Point a_point) {
  const IntersectionResult hit = circle_intersection(prev, cur);
  if (hit.kind == IntersectionResult::Kind::none) throw DomainError("peak_decomposition: circles do not intersect");

  const Point axis = cur.center - prev.center;
  const double d = norm(axis);
  const Point x_axis = (1.0 / d) * axis;
  Point y_axis = perp(x_axis);
  const Point rel = a_point - prev.center;
  const double ax = dot(rel, x_axis);
  double ay = dot(rel, y_axis);

  PeakDecomposition out;
  if (ay < 0.0) {
    y_axis = -1.0 * y_axis;
    ay = -ay;
    out.flipped = true;
  }
  out.peak_prev = prev.center + prev.radius * y_axis;
  out.peak_cur = cur.center + cur.radius * y_axis;

  const double prev_angle = std::atan2(ay, ax);
  const double cur_angle = std::atan2(ay, ax - d);
  const Coloring cp = color_arc(prev.center, prev.radius, x_axis, y_axis, prev_angle, true, cur);
  const Coloring cc = color_arc(cur.center, cur.radius, x_axis, y_axis, cur_angle, false, prev);
  out.color_prev = cp.color;
  out.color_cur = cc.color;

  const double sp = cp.color == ArcColor::green ? 1.0 : -1.0;
  const double sc = cc.color == ArcColor::green ? 1.0 : -1.0;
  out.horizontal = sp * std::abs(ax) + sc * std::abs(d - ax);
  out.vertical = sp * (prev.radius - ay) + sc * (cur.radius - ay);

  const double scale = std::max(prev.radius, cur.radius);
  out.degenerate = !cp.consistent || !cc.consistent || cp.empty || cc.empty || ay <= 1e-12 * scale;
  return out;
}

double potential(const Chain& chain, const PotentialConstants& k) {
  const std::size_t n = chain.size();
  if (n == 1) return 0.0;
  const double phi = k.phi();
  double travel = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const PeakDecomposition pd = peak_decomposition(chain.circle(j), chain.circle(j + 1), chain.joint(j).a);
    travel += 2.0 * pd.horizontal + pd.vertical;
  }
  return phi * (chain.circle(n - 1).radius - chain.circle(0).radius) - phi / 3.0 * travel;
}

double upsilon(const Chain& chain, const TerminalPair& t, const PotentialConstants& k) {
  return arc_path(chain, t).length - k.lambda * rubber_band(chain, t).length + potential(chain, k);
}

}  // namespace dstretch
