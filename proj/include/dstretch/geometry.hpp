#pragma once

// Planar primitives: points, circles, signed angles, circle-circle
// intersection, circumcircles and the incircle classification.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace dstretch {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
/// Counterclockwise quarter turn.
constexpr Point perp(Point p) { return {-p.y, p.x}; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Throws DomainError on NaN or infinite coordinates.
Point checked_point(double x, double y);

struct Circle {
  Point center;
  double radius = 1.0;

  /// Point on the boundary at polar angle theta (radians) around the center.
  Point at(double theta) const {
    return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
  }
  friend constexpr bool operator==(const Circle&, const Circle&) = default;
};

/// Throws DomainError unless the center is finite and 0 < radius < inf.
Circle checked_circle(Point center, double radius);

/// Radians, always normalized to (-pi, pi].
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(normalize(radians)) {}

  double value() const noexcept { return value_; }

  static double normalize(double radians);

 private:
  double value_ = 0.0;
};

/// Counterclockwise angle from ray o->p to ray o->q.
Angle signed_angle(Point p, Point o, Point q);

/// Polar angle of p around o in (-pi, pi].
inline double polar_angle(Point o, Point p) { return Angle(std::atan2(p.y - o.y, p.x - o.x)).value(); }

/// |d - (r1 + r2)| or |d - |r1 - r2|| at or below this fraction of the
/// larger radius counts as tangency.
inline constexpr double kTangencyTolerance = 1e-9;

struct IntersectionResult {
  enum class Kind { none, tangent, pair };

  Kind kind = Kind::none;
  /// For a pair, points[0] is left of the directed line center1 -> center2.
  /// For tangency both entries hold the touching point.
  std::array<Point, 2> points{};

  std::size_t count() const {
    switch (kind) {
      case Kind::none: return 0;
      case Kind::tangent: return 1;
      case Kind::pair: return 2;
    }
    return 0;
  }
};

IntersectionResult circle_intersection(const Circle& c1, const Circle& c2);

/// Unique circle through three non-collinear points.
Circle circumcircle(Point p, Point q, Point r);

enum class CircleSide { inside, on, outside };

/// Exact position of d relative to the circumcircle of (a, b, c).
CircleSide incircle_test(Point a, Point b, Point c, Point d);

}  // namespace dstretch
