#include "dstretch/geometry.hpp"

#include <algorithm>
#include <string>

#include "dstretch/errors.hpp"
#include "dstretch/predicates.hpp"

namespace dstretch {

Point checked_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("point coordinates must be finite");
  return {x, y};
}

Circle checked_circle(Point center, double radius) {
  if (!is_finite(center)) throw DomainError("circle center must be finite");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("circle radius must be positive and finite");
  return {center, radius};
}

double Angle::normalize(double radians) {
  constexpr double pi = std::numbers::pi;
  double r = std::remainder(radians, 2.0 * pi);  // [-pi, pi]
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

Angle signed_angle(Point p, Point o, Point q) {
  if (p == o || q == o) throw DomainError("signed_angle: ray endpoint coincides with the apex");
  const Point u = p - o;
  const Point v = q - o;
  return Angle(std::atan2(cross(u, v), dot(u, v)));
}

IntersectionResult circle_intersection(const Circle& c1, const Circle& c2) {
  if (c1 == c2) throw DomainError("circle_intersection: identical circles");
  const Point delta = c2.center - c1.center;
  const double d = norm(delta);
  const double r1 = c1.radius;
  const double r2 = c2.radius;
  const double tol = kTangencyTolerance * std::max(r1, r2);

  IntersectionResult out;
  if (d == 0.0) return out;  // concentric, different radii
  const Point dir = (1.0 / d) * delta;

  if (std::abs(d - (r1 + r2)) <= tol) {
    out.kind = IntersectionResult::Kind::tangent;
    out.points = {c1.center + r1 * dir, c1.center + r1 * dir};
    return out;
  }
  if (std::abs(d - std::abs(r1 - r2)) <= tol) {
    // Internal tangency: touching point lies on the far side of the smaller circle.
    const Point touch = r1 >= r2 ? c1.center + r1 * dir : c1.center - r1 * dir;
    out.kind = IntersectionResult::Kind::tangent;
    out.points = {touch, touch};
    return out;
  }
  if (d > r1 + r2 || d < std::abs(r1 - r2)) return out;

  const double along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double half_chord = std::sqrt(std::max(0.0, r1 * r1 - along * along));
  const Point base = c1.center + along * dir;
  const Point offset = half_chord * perp(dir);
  out.kind = IntersectionResult::Kind::pair;
  out.points = {base + offset, base - offset};
  return out;
}

Circle circumcircle(Point p, Point q, Point r) {
  if (predicates::orient2d(p, q, r) == 0) throw DomainError("circumcircle: collinear points");
  const Point b = q - p;
  const Point c = r - p;
  const double denom = 2.0 * cross(b, c);
  const double bb = dot(b, b);
  const double cc = dot(c, c);
  const Point rel{(c.y * bb - b.y * cc) / denom, (b.x * cc - c.x * bb) / denom};
  return {p + rel, norm(rel)};
}

CircleSide incircle_test(Point a, Point b, Point c, Point d) {
  const int orient = predicates::orient2d(a, b, c);
  if (orient == 0) throw DomainError("incircle_test: collinear reference triangle");
  const int s = predicates::incircle(a, b, c, d) * orient;
  if (s > 0) return CircleSide::inside;
  if (s < 0) return CircleSide::outside;
  return CircleSide::on;
}

}  // namespace dstretch
