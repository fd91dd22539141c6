#pragma once

// Seeded generators for random chains, terminal pairs and point sets.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dstretch/chain.hpp"
#include "dstretch/geometry.hpp"

namespace dstretch {

struct RandomChainOptions {
  /// Each new radius is the previous one times exp(U(-radius_spread, radius_spread)).
  double radius_spread = 1.0986122886681098;  // ln 3
  double min_radius = 0.1;
  double max_radius = 10.0;
  /// Attempts per link before the chain is discarded and restarted.
  std::size_t max_rejections = 1000;
  std::size_t max_restarts = 100;
};

/// Builds a chain circle by circle. Every candidate intersects its
/// predecessor by construction (center distance strictly between |r - r'|
/// and r + r'); candidates breaking the connecting-arc condition on the
/// predecessor are redrawn. A link that exceeds max_rejections restarts the
/// chain from the seed circle; DomainError after max_restarts restarts.
Chain random_chain(std::size_t n, std::mt19937_64& rng, const RandomChainOptions& options = {});

/// Uniform angles on the admissible terminal ranges of both end circles.
TerminalPair random_terminals(const Chain& chain, std::mt19937_64& rng);

/// n independent uniform points in the unit square.
std::vector<Point> random_points(std::size_t n, std::mt19937_64& rng);

/// Deterministic seed for item `index` of a run seeded with `seed`
/// (splitmix64 finalizer), so items can be generated in any order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace dstretch
