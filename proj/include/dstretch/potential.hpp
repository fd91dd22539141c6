#pragma once

// Peaks, green/red arcs, horizontal and vertical travel, the potential of a
// chain and the target function |P| - lambda*|D| + potential.

#include "dstretch/chain.hpp"
#include "dstretch/constants.hpp"

namespace dstretch {

enum class ArcColor { green, red };

/// Decomposition of one joint, expressed in the local frame where the
/// centers lie on the x axis (previous center left) and the intersection
/// point is on or above it.
struct PeakDecomposition {
  Point peak_prev;  // topmost point of the previous circle (world coordinates)
  Point peak_cur;   // topmost point of the current circle (world coordinates)
  ArcColor color_prev = ArcColor::green;
  ArcColor color_cur = ArcColor::green;
  double horizontal = 0.0;  // H
  double vertical = 0.0;    // V
  /// The local frame was mirrored to bring the intersection point up.
  bool flipped = false;
  /// The arc probes disagreed with the angular test, or an arc has zero length.
  bool degenerate = false;
};

PeakDecomposition peak_decomposition(const Circle& prev, const Circle& cur, Point a_point);

/// phi * (r_n - r_1) - (phi / 3) * sum over joints of (2H + V), summed left
/// to right. Zero for a single circle.
double potential(const Chain& chain, const PotentialConstants& k = kDefaultConstants);

/// |P(u, v)| - lambda |D(u, v)| + potential.
double upsilon(const Chain& chain, const TerminalPair& t, const PotentialConstants& k = kDefaultConstants);

}  // namespace dstretch
