#include "dstretch/predicates.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <vector>

namespace dstretch::predicates {

namespace {

std::atomic<unsigned long long> g_orient_exact{0};
std::atomic<unsigned long long> g_incircle_exact{0};

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

// Floating-point expansions: a sum of nonoverlapping doubles stored in
// increasing order of magnitude, zero components removed. The sign of the
// represented value is the sign of the last component.
using Expansion = std::vector<double>;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

Expansion from_diff(double a, double b) {
  double x, y;
  two_sum(a, -b, x, y);
  Expansion e;
  if (y != 0.0) e.push_back(y);
  if (x != 0.0) e.push_back(x);
  return e;
}

Expansion grow(const Expansion& e, double b) {
  Expansion h;
  h.reserve(e.size() + 1);
  double q = b;
  for (double ei : e) {
    double sum, err;
    two_sum(q, ei, sum, err);
    if (err != 0.0) h.push_back(err);
    q = sum;
  }
  if (q != 0.0 || h.empty()) h.push_back(q);
  if (h.size() == 1 && h[0] == 0.0) h.clear();
  return h;
}

Expansion add(const Expansion& e, const Expansion& f) {
  Expansion h = e;
  for (double fi : f) h = grow(h, fi);
  return h;
}

Expansion negate(Expansion e) {
  for (double& c : e) c = -c;
  return e;
}

Expansion scale(const Expansion& e, double b) {
  Expansion h;
  if (e.empty() || b == 0.0) return h;
  h.reserve(2 * e.size());
  double q, hh;
  two_product(e[0], b, q, hh);
  if (hh != 0.0) h.push_back(hh);
  for (std::size_t i = 1; i < e.size(); ++i) {
    double p1, p0, sum, err;
    two_product(e[i], b, p1, p0);
    two_sum(q, p0, sum, err);
    if (err != 0.0) h.push_back(err);
    two_sum(p1, sum, q, err);
    if (err != 0.0) h.push_back(err);
  }
  if (q != 0.0) h.push_back(q);
  return h;
}

Expansion mul(const Expansion& e, const Expansion& f) {
  Expansion h;
  for (double fi : f) h = add(h, scale(e, fi));
  return h;
}

int sign(const Expansion& e) {
  if (e.empty()) return 0;
  const double top = e.back();
  return (top > 0.0) - (top < 0.0);
}

int orient_exact(const Point& a, const Point& b, const Point& c) {
  g_orient_exact.fetch_add(1, std::memory_order_relaxed);
  const Expansion acx = from_diff(a.x, c.x);
  const Expansion acy = from_diff(a.y, c.y);
  const Expansion bcx = from_diff(b.x, c.x);
  const Expansion bcy = from_diff(b.y, c.y);
  return sign(add(mul(acx, bcy), negate(mul(acy, bcx))));
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  g_incircle_exact.fetch_add(1, std::memory_order_relaxed);
  const Expansion adx = from_diff(a.x, d.x), ady = from_diff(a.y, d.y);
  const Expansion bdx = from_diff(b.x, d.x), bdy = from_diff(b.y, d.y);
  const Expansion cdx = from_diff(c.x, d.x), cdy = from_diff(c.y, d.y);

  const Expansion alift = add(mul(adx, adx), mul(ady, ady));
  const Expansion blift = add(mul(bdx, bdx), mul(bdy, bdy));
  const Expansion clift = add(mul(cdx, cdx), mul(cdy, cdy));

  const Expansion bc = add(mul(bdx, cdy), negate(mul(bdy, cdx)));
  const Expansion ca = add(mul(cdx, ady), negate(mul(cdy, adx)));
  const Expansion ab = add(mul(adx, bdy), negate(mul(ady, bdx)));

  return sign(add(add(mul(alift, bc), mul(blift, ca)), mul(clift, ab)));
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double detsum = std::abs(left) + std::abs(right);
  if (std::abs(det) > kOrientBound * detsum) return (det > 0.0) - (det < 0.0);
  return orient_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  if (std::abs(det) > kIncircleBound * permanent) return (det > 0.0) - (det < 0.0);
  return incircle_exact(a, b, c, d);
}

FallbackStats fallback_stats() {
  return {g_orient_exact.load(std::memory_order_relaxed), g_incircle_exact.load(std::memory_order_relaxed)};
}

}  // namespace dstretch::predicates
