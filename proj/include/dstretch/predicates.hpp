#pragma once

// Sign-exact orientation and incircle predicates.
//
// Both run a floating-point filter first and fall back to exact expansion
// arithmetic when the filter cannot certify the sign. The returned sign is
// the sign of the exact determinant for the given double coordinates.

#include "dstretch/geometry.hpp"

namespace dstretch::predicates {

/// +1 if a, b, c turn counterclockwise, -1 if clockwise, 0 if collinear.
int orient2d(const Point& a, const Point& b, const Point& c);

/// For counterclockwise a, b, c: +1 if d is strictly inside their
/// circumcircle, -1 if strictly outside, 0 if cocircular. The sign flips
/// when a, b, c are clockwise.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

/// Counts how often each predicate needed the exact stage. Diagnostic only.
struct FallbackStats {
  unsigned long long orient_exact = 0;
  unsigned long long incircle_exact = 0;
};
FallbackStats fallback_stats();

}  // namespace dstretch::predicates
