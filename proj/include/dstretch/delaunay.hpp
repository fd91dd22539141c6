#pragma once

// Delaunay triangulation of finite planar point sets.
//
// Triangles are stored as counterclockwise vertex triples. neighbors[i] is
// the triangle across the edge opposite vertices[i], i.e. the edge
// (vertices[i+1], vertices[i+2]), or kBoundary on the convex hull.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dstretch/geometry.hpp"

namespace dstretch {

inline constexpr int kBoundary = -1;

struct Triangle {
  std::array<int, 3> vertices{};
  std::array<int, 3> neighbors{kBoundary, kBoundary, kBoundary};
};

class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(std::vector<Point> points, std::vector<Triangle> triangles)
      : points_(std::move(points)), triangles_(std::move(triangles)) {}

  /// Builds adjacency from bare vertex triples. Used for externally supplied
  /// triangulations (tests, validation fixtures).
  static Triangulation from_triples(std::vector<Point> points, const std::vector<std::array<int, 3>>& triples);

  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const Triangle& triangle(int t) const { return triangles_[static_cast<std::size_t>(t)]; }
  std::size_t size() const noexcept { return triangles_.size(); }

  /// Undirected edges (i < j), sorted.
  std::vector<std::array<int, 2>> edges() const;

  /// Vertices on the convex hull boundary (including collinear ones).
  std::size_t hull_vertex_count() const;

 private:
  std::vector<Point> points_;
  std::vector<Triangle> triangles_;
};

struct TriangulateOptions {
  /// Seed for the random insertion order.
  std::uint64_t seed = 0x5eed;
};

/// Randomized incremental insertion with walking point location and
/// Lawson flips on exact predicates. Cocircular ties are resolved by
/// insertion order.
Triangulation triangulate(std::span<const Point> points, const TriangulateOptions& options = {});

struct DelaunayViolation {
  enum class Kind {
    empty_circle,    // point strictly inside a triangle's circumcircle
    orientation,     // triangle not counterclockwise
    adjacency,       // neighbor link not reciprocated or edge mismatch
    vertex_index,    // vertex index out of range
  };
  Kind kind = Kind::empty_circle;
  int triangle = -1;
  int point = -1;  // offending point for empty_circle, else -1
  friend bool operator==(const DelaunayViolation&, const DelaunayViolation&) = default;
};

/// Brute-force check of every point against every circumcircle plus the
/// structural invariants. Points exactly on a circumcircle are legal.
std::vector<DelaunayViolation> validate_delaunay(const Triangulation& t);

/// Triangles whose interiors the open segment x -> y meets, in order along
/// the segment. Empty when xy is an edge. Throws DegeneracyError when the
/// segment passes exactly through another vertex.
std::vector<int> crossed_triangles(const Triangulation& t, int x, int y);

/// Same walk, towards an arbitrary target point inside the hull. Stops at
/// the triangle containing the target.
std::vector<int> crossed_triangles_towards(const Triangulation& t, int x, Point target);

struct CrossingResult {
  std::vector<int> triangles;
  bool jittered = false;
  Point target;  // y itself, or the jittered stand-in
};

/// Angle by which y is rotated around x when the exact segment hits a vertex.
inline constexpr double kCrossingJitterRadians = 1e-12;

/// crossed_triangles, retrying once with y rotated around x by
/// kCrossingJitterRadians when the segment passes through a vertex.
CrossingResult crossed_triangles_with_jitter(const Triangulation& t, int x, int y);

/// Index of a triangle incident to vertex v, or -1.
int incident_triangle(const Triangulation& t, int v);

}  // namespace dstretch
