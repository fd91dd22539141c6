#pragma once

// Lipschitz certification of the four closing inequalities g1..g4 < 0.
//
// g1, g2 live on [pi/2, pi] and g3, g4 on [0, pi/2]. Each is certified by a
// bisection that bounds the function on [s, t] by
//   max(g(s), g(t)) + L * (t - s) / 2
// and splits the interval while that apex is not below the guard.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "dstretch/constants.hpp"

namespace dstretch::verifier {

struct VerifierConfig {
  double lambda = 1.8;
  double rho = 1.998;
  double lipschitz = 16.0;
  /// Certification needs apex <= guard (strictly negative margin).
  double guard = -1e-6;
  int max_depth = 64;

  PotentialConstants constants() const { return {lambda, rho}; }
  double phi() const { return constants().phi(); }
};

/// Threshold angle gamma+(alpha) for 0 <= alpha < pi (alpha = 0 uses the
/// limit arcsin(1/lambda)). Throws InternalError if the arcsin argument
/// leaves [-1, 1].
double gamma_plus(double alpha, double lambda = 1.8);

double f_eval(double alpha, double beta, double gamma, double lambda = 1.8);

/// Closed interval on which inequality i (1..4) is certified.
std::array<double, 2> interval_of(int i);

/// g_i(alpha); throws DomainError for i outside 1..4 or alpha outside the
/// closed interval of inequality i.
double g_eval(int i, double alpha, const VerifierConfig& config = {});

/// depth_exhausted also covers intervals where an endpoint value already
/// sits above the guard: those are refined only until the apex turns
/// negative, since no further split could reach the guard.
enum class BoundStatus { certified_negative, violation_found, depth_exhausted };
std::string to_string(BoundStatus s);

struct BoundOutcome {
  BoundStatus status = BoundStatus::certified_negative;
  double apex = 0.0;
  std::uint64_t evaluations = 0;
  std::optional<double> violation_at;
};

using ScalarFunction = std::function<double(double)>;

/// Bisection bound for an arbitrary function with Lipschitz constant
/// config.lipschitz, left half first.
BoundOutcome bound_function(const ScalarFunction& g, double s, double t, const VerifierConfig& config);

/// bound_function on g_i; s < t must lie inside interval_of(i).
BoundOutcome bound(int i, double s, double t, const VerifierConfig& config = {});

struct InequalityResult {
  int index = 0;
  std::array<double, 2> interval{};
  BoundOutcome outcome;
  /// False when a configuration error stopped the run before this inequality.
  bool evaluated = false;
};

struct CertificateReport {
  std::array<InequalityResult, 4> inequalities{};
  bool pass = false;
  VerifierConfig config;
  /// Set when the configuration itself is unusable (phi <= 0, arcsin domain).
  std::string config_error;
};

CertificateReport certify(const VerifierConfig& config = {});

std::string to_json(const CertificateReport& report);

/// Largest central-difference slope (h = 1e-6) of g_i over `samples` seeded
/// uniform points of its interval.
double lipschitz_spot_check(int i, std::size_t samples, std::uint64_t seed, const VerifierConfig& config = {});

/// Same probe for gamma+ over (0, pi).
double gamma_plus_slope_check(std::size_t samples, std::uint64_t seed, double lambda = 1.8);

}  // namespace dstretch::verifier
