#pragma once

// Chains of circles.
//
// A chain is an ordered list of distinct circles where consecutive circles
// intersect and, on every interior circle, the two connecting arcs (the
// parts of its boundary lying inside the previous and the next circle) share
// at most an endpoint. Circles are indexed 0..n-1 here; joint j sits between
// circles j and j+1 and carries the intersection points a_j (left of the
// directed center line o_j -> o_{j+1}) and b_j (right of it). With that
// labeling every A arc runs along the left side of the chain and every B arc
// along the right side.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dstretch/delaunay.hpp"
#include "dstretch/geometry.hpp"

namespace dstretch {

class ChainError : public std::invalid_argument {
 public:
  enum class Kind {
    empty,            // no circles
    duplicate,        // two identical circles
    not_intersecting, // consecutive circles disjoint or nested (Property 1)
    overlapping_arcs, // connecting arcs overlap on an interior circle (Property 2)
    terminal,         // terminal off its circle or inside the neighbor
  };

  ChainError(Kind kind, int circle, const std::string& what)
      : std::invalid_argument(what), kind_(kind), circle_(circle) {}

  Kind kind() const noexcept { return kind_; }
  /// Circle (or joint, for Property 1) the error refers to; -1 if none.
  int circle() const noexcept { return circle_; }

 private:
  Kind kind_;
  int circle_;
};

/// Angular slack used by the connecting-arc overlap test and for terminals
/// sitting exactly at a connecting-arc endpoint.
inline constexpr double kArcAngleTolerance = 1e-9;

/// Terminals farther than this fraction of the radius from their circle are
/// rejected; closer ones are projected onto the boundary.
inline constexpr double kTerminalSnapTolerance = 1e-4;

struct Joint {
  Point a;
  Point b;
  bool tangent = false;
};

/// The part of a circle's boundary inside a neighboring circle, as an
/// angular interval centered on the direction towards the neighbor.
struct ConnectingArc {
  double center_angle = 0.0;
  double half_width = 0.0;
};

class Chain {
 public:
  const std::vector<Circle>& circles() const noexcept { return circles_; }
  const Circle& circle(std::size_t i) const { return circles_[i]; }
  std::size_t size() const noexcept { return circles_.size(); }

  const std::vector<Joint>& joints() const noexcept { return joints_; }
  const Joint& joint(std::size_t j) const { return joints_[j]; }

  /// Connecting arc on circle i towards circle i+1 (requires i+1 < size()).
  const ConnectingArc& toward_next(std::size_t i) const { return next_arc_[i]; }
  /// Connecting arc on circle i towards circle i-1 (requires i >= 1).
  const ConnectingArc& toward_prev(std::size_t i) const { return prev_arc_[i - 1]; }

  /// Sub-chain of the first `count` circles.
  Chain prefix(std::size_t count) const;

 private:
  friend Chain make_chain(std::vector<Circle> circles);
  std::vector<Circle> circles_;
  std::vector<Joint> joints_;
  std::vector<ConnectingArc> next_arc_;  // next_arc_[j]: on circle j towards j+1
  std::vector<ConnectingArc> prev_arc_;  // prev_arc_[j]: on circle j+1 towards j
};

/// Validates both chain properties and labels the joints.
Chain make_chain(std::vector<Circle> circles);

/// Same circles in reverse order (labels recomputed, so a and b swap).
Chain reverse(const Chain& chain);

struct TerminalPair {
  Point u;
  Point v;
  double u_angle = 0.0;  // polar angle of u around the first center
  double v_angle = 0.0;  // polar angle of v around the last center
};

/// Validates terminals (u on the first circle outside the second circle's
/// interior, v symmetrically) and snaps them onto their circles.
TerminalPair make_terminals(const Chain& chain, Point u, Point v);
TerminalPair terminals_at(const Chain& chain, double u_angle, double v_angle);

/// Angular range [start, start + sweep] (counterclockwise) where a terminal
/// may sit on the first (first = true) or last circle.
struct AngularRange {
  double start = 0.0;
  double sweep = 0.0;
};
AngularRange terminal_range(const Chain& chain, bool first);

struct ChainArc {
  std::size_t circle = 0;
  double start_angle = 0.0;  // counterclockwise from here
  double sweep = 0.0;        // radians, >= 0
  double length = 0.0;       // radius * sweep
  Point prev_end;            // a_{i-1} (or b_{i-1}); u on the first circle
  Point next_end;            // a_i (or b_i); v on the last circle
};

struct ArcDecomposition {
  std::vector<ChainArc> a_arcs;  // A_1..A_n
  std::vector<ChainArc> b_arcs;  // B_1..B_n
  std::vector<double> gate_lengths;
};

ArcDecomposition arcs(const Chain& chain, const TerminalPair& t);

struct RubberBand {
  /// u, bend points, v.
  std::vector<Point> vertices;
  /// Crossing point p_j of the polyline with gate j.
  std::vector<Point> gate_points;
  double length = 0.0;
  /// Some p_j coincides with a_j or b_j.
  bool obstructed = false;
  std::vector<int> witnesses;
  /// The polyline has a vertex other than u and v.
  bool bent = false;
};

/// Shortest polyline from u to v through the gates in order (funnel
/// algorithm over the sleeve of gate segments).
RubberBand rubber_band(const Chain& chain, const TerminalPair& t);

/// Whether segment uv enters and exits the circles in chain order. Throws
/// DomainError if the terminals are obstructed.
bool stab_order(const Chain& chain, const TerminalPair& t);

struct PathEdge {
  enum class Kind { arc_a, arc_b, gate };
  Kind kind = Kind::arc_a;
  std::size_t index = 0;  // circle for arcs, joint for gates
  double length = 0.0;
  friend bool operator==(const PathEdge&, const PathEdge&) = default;
};

struct ArcPath {
  double length = 0.0;
  std::vector<PathEdge> edges;
};

/// Shortest u-v path along the A/B arcs and the gate chords.
ArcPath arc_path(const Chain& chain, const TerminalPair& t);

struct ChainStretchEstimate {
  double estimate = 0.0;
  TerminalPair witness;
};

/// Sampled lower bound on max |P|/|D| over terminal pairs: a uniform grid of
/// samples_per_arc + 1 angles on each terminal range (both ends included),
/// then refine_iters rounds of coordinate-wise golden-section search around
/// the best grid pair.
ChainStretchEstimate chain_stretch(const Chain& chain, std::size_t samples_per_arc, std::size_t refine_iters);

struct TriangulationChain {
  std::vector<int> triangles;
  /// Empty when x and y are adjacent in the triangulation.
  std::optional<Chain> chain;
  std::optional<TerminalPair> terminals;
  bool jittered = false;
};

/// Circumcircles of the triangles crossed by segment xy (consecutive
/// duplicates collapsed) with x and y as terminals. Segment-through-vertex
/// degeneracies propagate unless allow_jitter is set.
TriangulationChain chain_from_triangulation(const Triangulation& t, int x, int y, bool allow_jitter = false);

}  // namespace dstretch
