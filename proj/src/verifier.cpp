#include "dstretch/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

#include "dstretch/errors.hpp"

namespace dstretch::verifier {

namespace {

constexpr double kPi = std::numbers::pi;

// z / sin(z), with the removable singularity at 0 filled in.
double z_over_sin(double z) { return z == 0.0 ? 1.0 : z / std::sin(z); }

}  // namespace

double gamma_plus(double alpha, double lambda) {
  const double z = (alpha + std::sin(alpha)) / 4.0;
  const double arg = z_over_sin(z) / lambda;
  if (!(arg >= -1.0 && arg <= 1.0))
    throw InternalError("gamma_plus: arcsin argument " + std::to_string(arg) + " outside [-1, 1]");
  return (3.0 * std::sin(alpha) - alpha) / 4.0 + std::asin(arg);
}

double f_eval(double alpha, double beta, double gamma, double lambda) {
  return -lambda * (std::cos(gamma) - std::cos(alpha) * (std::cos(beta - gamma) + beta * std::sin(beta - gamma)));
}

std::array<double, 2> interval_of(int i) {
  switch (i) {
    case 1:
    case 2: return {kPi / 2.0, kPi};
    case 3:
    case 4: return {0.0, kPi / 2.0};
    default: throw DomainError("inequality index must be 1..4");
  }
}

double g_eval(int i, double alpha, const VerifierConfig& config) {
  const auto [lo, hi] = interval_of(i);
  if (!(alpha >= lo && alpha <= hi)) throw DomainError("g_eval: alpha outside the inequality's interval");
  const double lambda = config.lambda;
  const double phi = config.phi();
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double common = s - alpha * c - 2.0 * phi / 3.0;
  switch (i) {
    case 1: return common - 2.0 * phi / 3.0 * c + f_eval(alpha, 0.0, 0.0, lambda);
    case 2: return common - 2.0 * phi / 3.0 * c + f_eval(alpha, 0.0, gamma_plus(alpha, lambda), lambda);
    case 3: return common - 4.0 * phi / 3.0 * c + f_eval(alpha, s, 0.0, lambda);
    default: return common - 4.0 * phi / 3.0 * c + f_eval(alpha, s, gamma_plus(alpha, lambda), lambda);
  }
}

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::certified_negative: return "certified_negative";
    case BoundStatus::violation_found: return "violation_found";
    case BoundStatus::depth_exhausted: return "depth_exhausted";
  }
  return "unknown";
}

namespace {

int precedence(BoundStatus s) {
  switch (s) {
    case BoundStatus::violation_found: return 2;
    case BoundStatus::depth_exhausted: return 1;
    case BoundStatus::certified_negative: return 0;
  }
  return 0;
}

BoundOutcome recurse(const ScalarFunction& g, double s, double t, const VerifierConfig& config, int depth) {
  BoundOutcome out;
  const double gs = g(s);
  const double gt = g(t);
  out.evaluations = 2;
  const double top = std::max(gs, gt);
  if (gs >= 0.0 || gt >= 0.0) {
    out.status = BoundStatus::violation_found;
    out.apex = top;
    out.violation_at = gs >= 0.0 ? s : t;
    return out;
  }
  out.apex = top + config.lipschitz * (t - s) / 2.0;
  if (out.apex <= config.guard) {
    out.status = BoundStatus::certified_negative;
    return out;
  }
  // With an endpoint above the guard no refinement can certify; refine only
  // until the apex is negative so the reported bound stays meaningful.
  const bool guard_unreachable = top > config.guard;
  if (depth >= config.max_depth || (guard_unreachable && out.apex < 0.0)) {
    out.status = BoundStatus::depth_exhausted;
    return out;
  }
  const double mid = s + (t - s) / 2.0;
  const BoundOutcome left = recurse(g, s, mid, config, depth + 1);
  const BoundOutcome right = recurse(g, mid, t, config, depth + 1);
  out.evaluations += left.evaluations + right.evaluations;
  out.apex = std::max(left.apex, right.apex);
  out.status = precedence(left.status) >= precedence(right.status) ? left.status : right.status;
  out.violation_at = left.violation_at ? left.violation_at : right.violation_at;
  return out;
}

}  // namespace

BoundOutcome bound_function(const ScalarFunction& g, double s, double t, const VerifierConfig& config) {
  if (!(s < t)) throw DomainError("bound: need s < t");
  return recurse(g, s, t, config, 0);
}

BoundOutcome bound(int i, double s, double t, const VerifierConfig& config) {
  const auto [lo, hi] = interval_of(i);
  if (s < lo || t > hi) throw DomainError("bound: [s, t] outside the inequality's interval");
  return bound_function([&](double a) { return g_eval(i, a, config); }, s, t, config);
}

CertificateReport certify(const VerifierConfig& config) {
  CertificateReport report;
  report.config = config;
  for (int i = 1; i <= 4; ++i) {
    report.inequalities[i - 1].index = i;
    report.inequalities[i - 1].interval = interval_of(i);
  }

  if (!(config.phi() > 0.0))
    report.config_error = "potential weight phi must be positive (lambda < rho)";
  else if (!(config.guard < 0.0))
    report.config_error = "guard must be negative";
  else if (!(config.lipschitz > 0.0))
    report.config_error = "Lipschitz constant must be positive";
  if (!report.config_error.empty()) return report;

  bool pass = true;
  try {
    for (auto& ineq : report.inequalities) {
      ineq.outcome = bound(ineq.index, ineq.interval[0], ineq.interval[1], config);
      ineq.evaluated = true;
      pass = pass && ineq.outcome.status == BoundStatus::certified_negative;
    }
  } catch (const InternalError& e) {
    report.config_error = e.what();
    pass = false;
  }
  report.pass = pass;
  return report;
}

std::string to_json(const CertificateReport& report) {
  nlohmann::ordered_json j;
  j["pass"] = report.pass;
  auto list = nlohmann::ordered_json::array();
  for (const auto& ineq : report.inequalities) {
    nlohmann::ordered_json e;
    e["i"] = ineq.index;
    e["interval"] = {ineq.interval[0], ineq.interval[1]};
    if (!ineq.evaluated) {
      e["apex"] = nullptr;
      e["status"] = "not_evaluated";
      e["evals"] = 0;
      list.push_back(e);
      continue;
    }
    e["apex"] = ineq.outcome.apex;
    e["status"] = to_string(ineq.outcome.status);
    e["evals"] = ineq.outcome.evaluations;
    if (ineq.outcome.violation_at) e["violation_at"] = *ineq.outcome.violation_at;
    list.push_back(e);
  }
  j["inequalities"] = list;
  j["lambda"] = report.config.lambda;
  j["rho"] = report.config.rho;
  j["phi"] = report.config.phi();
  j["L"] = report.config.lipschitz;
  j["guard"] = report.config.guard;
  if (!report.config_error.empty()) j["error"] = report.config_error;
  return j.dump();
}

namespace {

template <typename F>
double max_slope(F f, double lo, double hi, std::size_t samples, std::uint64_t seed) {
  constexpr double h = 1e-6;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo + h, hi - h);
  double best = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double a = dist(rng);
    best = std::max(best, std::abs(f(a + h) - f(a - h)) / (2.0 * h));
  }
  return best;
}

}  // namespace

double lipschitz_spot_check(int i, std::size_t samples, std::uint64_t seed, const VerifierConfig& config) {
  if (samples < 1000) throw DomainError("lipschitz_spot_check: need at least 1000 samples");
  const auto [lo, hi] = interval_of(i);
  return max_slope([&](double a) { return g_eval(i, a, config); }, lo, hi, samples, seed);
}

double gamma_plus_slope_check(std::size_t samples, std::uint64_t seed, double lambda) {
  if (samples < 1000) throw DomainError("gamma_plus_slope_check: need at least 1000 samples");
  return max_slope([&](double a) { return gamma_plus(a, lambda); }, 0.0, kPi, samples, seed);
}

}  // namespace dstretch::verifier
