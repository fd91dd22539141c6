#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dstretch/errors.hpp"
#include "dstretch/verifier.hpp"

using namespace dstretch;
using namespace dstretch::verifier;
constexpr double kPi = std::numbers::pi;

// Reference values below come from a 30-digit evaluation of the formulas.

TEST(GammaPlus, Values) {
  EXPECT_NEAR(gamma_plus(0.0), std::asin(1 / 1.8), 1e-15);
  EXPECT_NEAR(gamma_plus(0.0), 0.589030970216274, 1e-14);
  EXPECT_NEAR(gamma_plus(kPi / 2), 0.995473883068736, 1e-14);
  EXPECT_NEAR(gamma_plus(1e-9), gamma_plus(0.0), 1e-8);
  EXPECT_GT(gamma_plus(kPi / 2), gamma_plus(0.0));
}

TEST(GammaPlus, ArcsinDomainGuard) {
  // z / sin z >= 1, so lambda < 1 leaves the arcsin domain.
  EXPECT_THROW(gamma_plus(1.0, 0.9), InternalError);
}

TEST(FEval, Values) {
  EXPECT_DOUBLE_EQ(f_eval(kPi / 2, 0, 0), -1.8);
  EXPECT_DOUBLE_EQ(f_eval(0, 0, 0), 0.0);
  EXPECT_DOUBLE_EQ(f_eval(kPi, 0, 0), -3.6);
}

TEST(GEval, Values) {
  EXPECT_NEAR(g_eval(1, kPi / 2), -0.888636928837830, 1e-13);
  EXPECT_NEAR(g_eval(1, kPi), -0.458407346410207, 1e-13);
  EXPECT_NEAR(g_eval(1, 2.0), -0.859224157165602, 1e-13);
  EXPECT_NEAR(g_eval(2, kPi / 2), -0.0680265672990384, 1e-13);
  EXPECT_NEAR(g_eval(2, kPi), -0.432350921843520, 1e-13);
  EXPECT_NEAR(g_eval(2, 2.0), -0.0206898054055060, 1e-13);
  EXPECT_NEAR(g_eval(3, 0.0), -0.265910786513489, 1e-13);
  EXPECT_NEAR(g_eval(3, kPi / 2), -0.888636928837830, 1e-13);
  EXPECT_NEAR(g_eval(3, 1.0), -0.424983941553015, 1e-13);
  EXPECT_NEAR(g_eval(4, 0.0), -0.265910786513489, 1e-13);
  EXPECT_NEAR(g_eval(4, kPi / 2), -0.0680265672990384, 1e-13);
  EXPECT_NEAR(g_eval(4, 1.0), -0.0276580075967422, 1e-13);
}

TEST(GEval, DomainErrors) {
  EXPECT_THROW(g_eval(0, 1.0), DomainError);
  EXPECT_THROW(g_eval(5, 1.0), DomainError);
  EXPECT_THROW(g_eval(1, 1.0), DomainError);
  EXPECT_THROW(g_eval(3, 2.0), DomainError);
  EXPECT_THROW(bound(1, 0.5, 2.0, {}), DomainError);
  EXPECT_THROW(bound_function([](double) { return -1.0; }, 1.0, 1.0, {}), DomainError);
}

TEST(GEval, LipschitzContinuityOnRandomPairs) {
  std::mt19937_64 rng(5);
  for (int i = 1; i <= 4; ++i) {
    const auto [lo, hi] = interval_of(i);
    std::uniform_real_distribution<double> d(lo, hi);
    for (int k = 0; k < 5000; ++k) {
      const double a = d(rng), b = d(rng);
      EXPECT_LE(std::abs(g_eval(i, a) - g_eval(i, b)), 16 * std::abs(a - b) + 1e-9);
    }
  }
}

TEST(Bound, SingleCallOnShortInterval) {
  const BoundOutcome o = bound(1, kPi / 2, kPi / 2 + 0.01, {});
  EXPECT_EQ(o.status, BoundStatus::certified_negative);
  EXPECT_EQ(o.evaluations, 2u);
  EXPECT_NEAR(o.apex, std::max(g_eval(1, kPi / 2), g_eval(1, kPi / 2 + 0.01)) + 16 * 0.005, 1e-15);
  EXPECT_NEAR(o.apex, -0.8086, 1e-3);
}

TEST(Bound, ViolationAtEndpoint) {
  const BoundOutcome o = bound_function([](double x) { return x - 0.5; }, 0.0, 1.0, {});
  EXPECT_EQ(o.status, BoundStatus::violation_found);
  EXPECT_EQ(o.apex, 0.5);
  ASSERT_TRUE(o.violation_at.has_value());
  EXPECT_EQ(*o.violation_at, 1.0);
}

TEST(Bound, InteriorViolationFoundByBisection) {
  // Negative at both ends, positive bump in the middle; slope at most 4.
  auto g = [](double x) { return 0.1 - 4 * std::abs(x - 0.3); };
  VerifierConfig cfg;
  cfg.lipschitz = 4;
  const BoundOutcome o = bound_function(g, 0.0, 1.0, cfg);
  EXPECT_EQ(o.status, BoundStatus::violation_found);
  ASSERT_TRUE(o.violation_at.has_value());
  EXPECT_GE(g(*o.violation_at), 0.0);
}

TEST(Bound, DepthCapAndGuardUnreachable) {
  VerifierConfig shallow;
  shallow.max_depth = 2;
  EXPECT_EQ(bound(4, 0.0, kPi / 2, shallow).status, BoundStatus::depth_exhausted);

  VerifierConfig absurd;
  absurd.guard = -10;
  const BoundOutcome o = bound(1, kPi / 2, kPi, absurd);
  EXPECT_EQ(o.status, BoundStatus::depth_exhausted);
  EXPECT_LT(o.apex, 0.0);
}

TEST(Bound, ApexIsAnUpperBoundOnEveryCertifiedInterval) {
  std::mt19937_64 rng(9);
  for (int i = 1; i <= 4; ++i) {
    const auto [lo, hi] = interval_of(i);
    std::uniform_real_distribution<double> d(lo, hi);
    for (int k = 0; k < 20; ++k) {
      double s = d(rng), t = d(rng);
      if (s > t) std::swap(s, t);
      if (t - s < 1e-6) continue;
      const BoundOutcome o = bound(i, s, t, {});
      ASSERT_EQ(o.status, BoundStatus::certified_negative);
      for (int m = 0; m <= 10000; ++m) {
        const double a = s + (t - s) * m / 10000.0;
        const double g = g_eval(i, a);
        ASSERT_LE(g, o.apex + 1e-9);
        ASSERT_LT(g, 0.0);
      }
    }
  }
}

TEST(Certify, DefaultPasses) {
  const CertificateReport r = certify({});
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.config_error.empty());
  for (const auto& q : r.inequalities) {
    EXPECT_EQ(q.outcome.status, BoundStatus::certified_negative);
    EXPECT_LE(q.outcome.apex, -1e-6);
    EXPECT_TRUE(q.evaluated);
  }
  EXPECT_EQ(r.inequalities[0].interval, (std::array<double, 2>{kPi / 2, kPi}));
  EXPECT_EQ(r.inequalities[2].interval, (std::array<double, 2>{0.0, kPi / 2}));
  // Bisection order is fixed, so the evaluation counts are too.
  EXPECT_EQ(r.inequalities[0].outcome.evaluations, 102u);
  EXPECT_EQ(r.inequalities[1].outcome.evaluations, 1694u);
  EXPECT_EQ(r.inequalities[2].outcome.evaluations, 202u);
  EXPECT_EQ(r.inequalities[3].outcome.evaluations, 29770u);
}

TEST(Certify, Deterministic) { EXPECT_EQ(to_json(certify({})), to_json(certify({}))); }

TEST(Certify, BrokenConfigurationsFail) {
  VerifierConfig big;
  big.lambda = 2.2;  // phi turns negative
  const CertificateReport a = certify(big);
  EXPECT_FALSE(a.pass);
  EXPECT_FALSE(a.config_error.empty());

  VerifierConfig small;
  small.lambda = 1.7;  // g2 and g4 become positive at pi/2
  const CertificateReport b = certify(small);
  EXPECT_FALSE(b.pass);
  EXPECT_EQ(b.inequalities[1].outcome.status, BoundStatus::violation_found);
  EXPECT_GE(g_eval(2, *b.inequalities[1].outcome.violation_at, small), 0.0);

  VerifierConfig guard;
  guard.guard = -10;
  const CertificateReport c = certify(guard);
  EXPECT_FALSE(c.pass);
  for (const auto& q : c.inequalities) EXPECT_LT(q.outcome.apex, 0.0);

  VerifierConfig positive;
  positive.guard = 0.0;
  EXPECT_FALSE(certify(positive).pass);
}

TEST(Certify, JsonShape) {
  const std::string j = to_json(certify({}));
  EXPECT_NE(j.find(R"("pass":true)"), std::string::npos);
  EXPECT_NE(j.find(R"("status":"certified_negative")"), std::string::npos);
  EXPECT_NE(j.find(R"("L":16.0)"), std::string::npos);
  EXPECT_NE(j.find(R"("lambda":1.8)"), std::string::npos);
}

TEST(SpotChecks, SlopesWithinLedger) {
  EXPECT_LE(lipschitz_spot_check(1, 20000, 1, {}), 6.0);
  EXPECT_LE(lipschitz_spot_check(2, 20000, 2, {}), 8.0);
  EXPECT_LE(lipschitz_spot_check(3, 20000, 3, {}), 10.0);
  EXPECT_LE(lipschitz_spot_check(4, 20000, 4, {}), 16.0);
  EXPECT_LE(gamma_plus_slope_check(20000, 5, 1.8), 1.15);
  EXPECT_THROW(lipschitz_spot_check(1, 999, 1, {}), DomainError);
}
