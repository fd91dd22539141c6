#pragma once

#include <cmath>

namespace dstretch {

/// Parameters of the amortized bound: the target weight lambda, the stretch
/// bound rho and the potential weight phi = (3/sqrt(5)) * (1 - lambda/rho).
struct PotentialConstants {
  double lambda = 1.8;
  double rho = 1.998;

  double phi() const { return 3.0 / std::sqrt(5.0) * (1.0 - lambda / rho); }
};

inline constexpr PotentialConstants kDefaultConstants{};

}  // namespace dstretch
