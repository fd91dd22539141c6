#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dstretch/errors.hpp"
#include "dstretch/geometry.hpp"
#include "oracles.hpp"

using namespace dstretch;
constexpr double kPi = std::numbers::pi;

TEST(SignedAngle, QuarterAndHalfTurns) {
  EXPECT_DOUBLE_EQ(signed_angle({1, 0}, {0, 0}, {0, 1}).value(), kPi / 2);
  EXPECT_DOUBLE_EQ(signed_angle({0, 1}, {0, 0}, {1, 0}).value(), -kPi / 2);
  EXPECT_EQ(signed_angle({1, 0}, {0, 0}, {-1, 0}).value(), kPi);
  EXPECT_EQ(signed_angle({-1, 0}, {0, 0}, {1, 0}).value(), kPi);
}

TEST(SignedAngle, DegenerateRaysRejected) {
  EXPECT_THROW(signed_angle({0, 0}, {0, 0}, {1, 0}), DomainError);
  EXPECT_THROW(signed_angle({1, 0}, {0, 0}, {0, 0}), DomainError);
}

TEST(SignedAngle, AntisymmetricAwayFromHalfTurn) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-5, 5);
  for (int k = 0; k < 5000; ++k) {
    const Point p{d(rng), d(rng)}, o{d(rng), d(rng)}, q{d(rng), d(rng)};
    const double a = signed_angle(p, o, q).value();
    if (a == kPi) continue;
    EXPECT_EQ(a, -signed_angle(q, o, p).value());
    EXPECT_GT(a, -kPi);
    EXPECT_LE(a, kPi);
  }
}

TEST(Angle, NormalizationRangeAndIdempotence) {
  EXPECT_EQ(Angle(-kPi).value(), kPi);
  EXPECT_EQ(Angle(kPi).value(), kPi);
  EXPECT_NEAR(Angle(3 * kPi / 2).value(), -kPi / 2, 1e-15);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-100, 100);
  for (int k = 0; k < 5000; ++k) {
    const double a = Angle(d(rng)).value();
    EXPECT_GT(a, -kPi);
    EXPECT_LE(a, kPi);
    EXPECT_EQ(Angle(a).value(), a);
  }
}

TEST(CircleIntersection, Examples) {
  const auto pair = circle_intersection({{0, 0}, 1}, {{1, 0}, 1});
  ASSERT_EQ(pair.kind, IntersectionResult::Kind::pair);
  EXPECT_NEAR(pair.points[0].x, 0.5, 1e-15);
  EXPECT_NEAR(pair.points[0].y, std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(pair.points[1].y, -std::sqrt(3.0) / 2, 1e-15);

  const auto touch = circle_intersection({{0, 0}, 1}, {{2, 0}, 1});
  ASSERT_EQ(touch.kind, IntersectionResult::Kind::tangent);
  EXPECT_NEAR(touch.points[0].x, 1.0, 1e-15);
  EXPECT_NEAR(touch.points[0].y, 0.0, 1e-15);

  EXPECT_EQ(circle_intersection({{0, 0}, 1}, {{3, 0}, 1}).kind, IntersectionResult::Kind::none);
  EXPECT_EQ(circle_intersection({{0, 0}, 3}, {{0.5, 0}, 1}).kind, IntersectionResult::Kind::none);
  EXPECT_THROW(circle_intersection({{0, 0}, 1}, {{0, 0}, 1}), DomainError);
}

TEST(CircleIntersection, InternalTangencyWithinTolerance) {
  const auto t = circle_intersection({{0, 0}, 2}, {{1 + 1e-12, 0}, 1});
  ASSERT_EQ(t.kind, IntersectionResult::Kind::tangent);
  EXPECT_NEAR(t.points[0].x, 2.0, 1e-9);
}

TEST(CircleIntersection, PointsOnBothBoundariesAndLeftFirst) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-3, 3), r(0.2, 3);
  int pairs = 0;
  for (int k = 0; k < 5000; ++k) {
    const Circle c1{{d(rng), d(rng)}, r(rng)}, c2{{d(rng), d(rng)}, r(rng)};
    const auto hit = circle_intersection(c1, c2);
    if (hit.kind != IntersectionResult::Kind::pair) continue;
    ++pairs;
    for (const Point& p : hit.points) {
      EXPECT_NEAR(distance(p, c1.center), c1.radius, 1e-12 * std::max(1.0, c1.radius));
      EXPECT_NEAR(distance(p, c2.center), c2.radius, 1e-12 * std::max(1.0, c2.radius));
    }
    EXPECT_GT(cross(c2.center - c1.center, hit.points[0] - c1.center), 0.0);
    EXPECT_LT(cross(c2.center - c1.center, hit.points[1] - c1.center), 0.0);
  }
  EXPECT_GT(pairs, 1000);
}

TEST(Circumcircle, Examples) {
  const Circle right = circumcircle({0, 0}, {1, 0}, {0, 1});
  EXPECT_NEAR(right.center.x, 0.5, 1e-15);
  EXPECT_NEAR(right.center.y, 0.5, 1e-15);
  EXPECT_NEAR(right.radius, std::sqrt(0.5), 1e-15);
  const Circle eq = circumcircle({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  EXPECT_NEAR(eq.center.x, 0.5, 1e-15);
  EXPECT_NEAR(eq.center.y, std::sqrt(3.0) / 6, 1e-15);
  EXPECT_NEAR(eq.radius, 1 / std::sqrt(3.0), 1e-15);
  EXPECT_THROW(circumcircle({0, 0}, {1, 1}, {2, 2}), DomainError);
}

TEST(Circumcircle, Equidistant) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int k = 0; k < 5000; ++k) {
    const Point p{d(rng), d(rng)}, q{d(rng), d(rng)}, s{d(rng), d(rng)};
    if (oracle::orient(p, q, s) == 0) continue;
    const Circle c = circumcircle(p, q, s);
    if (c.radius > 1e4) continue;  // nearly collinear; relative error grows with the radius
    EXPECT_NEAR(distance(c.center, p), c.radius, 1e-12 * c.radius);
    EXPECT_NEAR(distance(c.center, q), c.radius, 1e-12 * c.radius);
    EXPECT_NEAR(distance(c.center, s), c.radius, 1e-12 * c.radius);
  }
}

TEST(IncircleTest, Examples) {
  EXPECT_EQ(incircle_test({0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}), CircleSide::inside);
  EXPECT_EQ(incircle_test({0, 0}, {1, 0}, {0, 1}, {1, 1}), CircleSide::on);
  EXPECT_EQ(incircle_test({0, 0}, {1, 0}, {0, 1}, {2, 2}), CircleSide::outside);
  EXPECT_THROW(incircle_test({0, 0}, {1, 1}, {2, 2}, {0, 1}), DomainError);
}

TEST(IncircleTest, PermutationInvariantAgainstOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-2, 2);
  auto expected = [](Point a, Point b, Point c, Point q) {
    const int s = oracle::incircle(a, b, c, q) * oracle::orient(a, b, c);
    return s > 0 ? CircleSide::inside : s < 0 ? CircleSide::outside : CircleSide::on;
  };
  for (int k = 0; k < 5000; ++k) {
    const Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)}, q{d(rng), d(rng)};
    if (oracle::orient(a, b, c) == 0) continue;
    const CircleSide side = incircle_test(a, b, c, q);
    EXPECT_EQ(side, expected(a, b, c, q));
    EXPECT_EQ(incircle_test(b, c, a, q), side);
    EXPECT_EQ(incircle_test(c, a, b, q), side);
    EXPECT_EQ(incircle_test(b, a, c, q), side);  // orientation flips with the determinant
  }
}
