#include "dstretch/random_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dstretch/errors.hpp"

namespace dstretch {

Chain random_chain(std::size_t n, std::mt19937_64& rng, const RandomChainOptions& options) {
  if (n == 0) throw DomainError("random_chain: n must be positive");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> spread(-options.radius_spread, options.radius_spread);
  std::uniform_real_distribution<double> direction(-std::numbers::pi, std::numbers::pi);

  std::vector<Circle> circles{{{0.0, 0.0}, 1.0}};
  std::size_t restarts = 0;
  while (circles.size() < n) {
    const Circle& last = circles.back();
    std::size_t attempts = 0;
    bool stuck = false;
    while (true) {
      if (attempts++ == options.max_rejections) {
        stuck = true;
        break;
      }
      const double r = std::clamp(last.radius * std::exp(spread(rng)), options.min_radius, options.max_radius);
      const double lo = std::abs(last.radius - r);
      const double hi = last.radius + r;
      // Keep clear of both tangency limits.
      const double d = lo + (0.01 + 0.98 * unit(rng)) * (hi - lo);
      const double theta = direction(rng);
      const Circle next{last.center + d * Point{std::cos(theta), std::sin(theta)}, r};
      if (std::find(circles.begin(), circles.end(), next) != circles.end()) continue;

      std::vector<Circle> candidate = circles;
      candidate.push_back(next);
      // Only the predecessor's connecting arcs change, but validating the
      // whole prefix keeps the chain validator the single authority.
      try {
        (void)make_chain(candidate);
      } catch (const ChainError&) {
        continue;
      }
      circles = std::move(candidate);
      break;
    }
    if (stuck) {
      // The last circle leaves too little room for a successor; start over.
      if (++restarts > options.max_restarts)
        throw DomainError("random_chain: rejection cap reached " + std::to_string(restarts) + " times");
      circles.resize(1);
    }
  }
  return make_chain(std::move(circles));
}

TerminalPair random_terminals(const Chain& chain, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const AngularRange ur = terminal_range(chain, true);
  const AngularRange vr = terminal_range(chain, false);
  const double ua = ur.start + unit(rng) * ur.sweep;
  const double va = vr.start + unit(rng) * vr.sweep;
  return terminals_at(chain, ua, va);
}

std::vector<Point> random_points(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    p.x = unit(rng);
    p.y = unit(rng);
  }
  return pts;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace dstretch
