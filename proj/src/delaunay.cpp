#include "dstretch/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "dstretch/errors.hpp"
#include "dstretch/predicates.hpp"

namespace dstretch {

namespace {

using predicates::orient2d;

constexpr int next3(int i) { return i == 2 ? 0 : i + 1; }
constexpr int prev3(int i) { return i == 0 ? 2 : i - 1; }

int index_in(const Triangle& t, int v) {
  for (int i = 0; i < 3; ++i)
    if (t.vertices[i] == v) return i;
  return -1;
}

class Builder {
 public:
  explicit Builder(std::vector<Point> pts) : pts_(std::move(pts)) {}

  Triangulation run(const std::vector<int>& order) {
    start_with(order[0], order[1], order[2]);
    for (std::size_t i = 3; i < order.size(); ++i) insert(order[i]);
    return Triangulation(std::move(pts_), std::move(tris_));
  }

 private:
  std::vector<Point> pts_;
  std::vector<Triangle> tris_;
  int last_ = 0;

  const Point& P(int v) const { return pts_[static_cast<std::size_t>(v)]; }
  Triangle& T(int t) { return tris_[static_cast<std::size_t>(t)]; }

  int add(std::array<int, 3> v, std::array<int, 3> n) {
    tris_.push_back(Triangle{v, n});
    return static_cast<int>(tris_.size()) - 1;
  }

  // Replace the neighbor link of t across the edge {a, b}.
  void relink(int t, int a, int b, int nb) {
    if (t == kBoundary) return;
    Triangle& tri = T(t);
    for (int i = 0; i < 3; ++i) {
      const int u = tri.vertices[next3(i)];
      const int w = tri.vertices[prev3(i)];
      if ((u == a && w == b) || (u == b && w == a)) {
        tri.neighbors[i] = nb;
        return;
      }
    }
    throw InternalError("delaunay: relink on missing edge");
  }

  void start_with(int a, int b, int c) {
    if (orient2d(P(a), P(b), P(c)) < 0) std::swap(b, c);
    last_ = add({a, b, c}, {kBoundary, kBoundary, kBoundary});
  }

  // Visibility walk from last_. Returns the triangle and, when the point lies
  // outside the hull, the index of a strictly visible boundary edge.
  struct Location {
    int tri;
    int outside_edge = -1;
  };

  Location locate(const Point& p) {
    int t = last_;
    int rotate = 0;
    for (std::size_t steps = 0; steps <= 4 * tris_.size() + 16; ++steps) {
      const Triangle& tri = T(t);
      bool moved = false;
      for (int k = 0; k < 3; ++k) {
        const int i = (k + rotate) % 3;
        if (orient2d(P(tri.vertices[next3(i)]), P(tri.vertices[prev3(i)]), p) < 0) {
          if (tri.neighbors[i] == kBoundary) return {t, i};
          t = tri.neighbors[i];
          moved = true;
          break;
        }
      }
      if (!moved) return {t, -1};
      rotate = (rotate + 1) % 3;
    }
    throw InternalError("delaunay: point location did not terminate");
  }

  void insert(int p) {
    const Point& pp = P(p);
    const Location loc = locate(pp);
    if (loc.outside_edge >= 0) {
      insert_outside(p, loc.tri, loc.outside_edge);
      return;
    }
    const Triangle& tri = T(loc.tri);
    int zero_count = 0;
    int zero_edge = -1;
    for (int i = 0; i < 3; ++i) {
      if (orient2d(P(tri.vertices[next3(i)]), P(tri.vertices[prev3(i)]), pp) == 0) {
        ++zero_count;
        zero_edge = i;
      }
    }
    if (zero_count >= 2) throw DomainError("triangulate: duplicate point");
    if (zero_count == 1)
      insert_on_edge(p, loc.tri, zero_edge);
    else
      insert_inside(p, loc.tri);
  }

  void insert_inside(int p, int t) {
    const auto [v0, v1, v2] = T(t).vertices;
    const auto [n0, n1, n2] = T(t).neighbors;
    const int tb = add({v1, v2, p}, {kBoundary, t, n0});
    const int tc = add({v2, v0, p}, {t, tb, n1});
    T(tb).neighbors[0] = tc;
    T(t) = Triangle{{v0, v1, p}, {tb, tc, n2}};
    relink(n0, v1, v2, tb);
    relink(n1, v2, v0, tc);
    last_ = t;
    legalize(t, p);
    legalize(tb, p);
    legalize(tc, p);
  }

  void insert_on_edge(int p, int t, int k) {
    const int c = T(t).vertices[k];
    const int a = T(t).vertices[next3(k)];
    const int b = T(t).vertices[prev3(k)];
    const int n_bc = T(t).neighbors[next3(k)];  // across (b, c), opposite a
    const int n_ca = T(t).neighbors[prev3(k)];  // across (c, a), opposite b
    const int t2 = T(t).neighbors[k];

    const int t3 = add({c, p, b}, {kBoundary, n_bc, t});
    T(t) = Triangle{{c, a, p}, {kBoundary, t3, n_ca}};
    relink(n_bc, b, c, t3);

    if (t2 != kBoundary) {
      const int j = index_in(T(t2), a);
      const int d = T(t2).vertices[next3(j)];  // t2 = (a, d, b) cyclically
      const int n_db = T(t2).neighbors[j];          // across (d, b), opposite a
      const int n_ad = T(t2).neighbors[prev3(j)];   // across (a, d), opposite b
      const int t4 = add({d, p, a}, {t, n_ad, t2});
      T(t2) = Triangle{{d, b, p}, {t3, t4, n_db}};
      relink(n_ad, a, d, t4);
      T(t).neighbors[0] = t4;
      T(t3).neighbors[0] = t2;
      last_ = t;
      legalize(t, p);
      legalize(t3, p);
      legalize(t2, p);
      legalize(t4, p);
    } else {
      last_ = t;
      legalize(t, p);
      legalize(t3, p);
    }
  }

  // Boundary edge starting at the end vertex of boundary edge (t, k).
  std::pair<int, int> next_hull_edge(int t, int k) {
    const int b = T(t).vertices[prev3(k)];
    int cur = t;
    for (std::size_t guard = 0; guard <= tris_.size(); ++guard) {
      const int j = index_in(T(cur), b);
      const int e = prev3(j);  // edge (b, v[j+1]) is opposite v[j+2]
      const int nb = T(cur).neighbors[e];
      if (nb == kBoundary) return {cur, e};
      cur = nb;
    }
    throw InternalError("delaunay: hull walk did not terminate");
  }

  // Boundary edge ending at the start vertex of boundary edge (t, k).
  std::pair<int, int> prev_hull_edge(int t, int k) {
    const int a = T(t).vertices[next3(k)];
    int cur = t;
    for (std::size_t guard = 0; guard <= tris_.size(); ++guard) {
      const int j = index_in(T(cur), a);
      const int e = next3(j);  // edge (v[j-1], a) is opposite v[j+1]
      const int nb = T(cur).neighbors[e];
      if (nb == kBoundary) return {cur, e};
      cur = nb;
    }
    throw InternalError("delaunay: hull walk did not terminate");
  }

  bool visible(int t, int k, const Point& p) {
    const Triangle& tri = T(t);
    return orient2d(P(tri.vertices[next3(k)]), P(tri.vertices[prev3(k)]), p) < 0;
  }

  void insert_outside(int p, int t, int k) {
    const Point& pp = P(p);
    std::vector<std::pair<int, int>> edges{{t, k}};
    for (auto e = prev_hull_edge(t, k); visible(e.first, e.second, pp); e = prev_hull_edge(e.first, e.second))
      edges.insert(edges.begin(), e);
    for (auto e = next_hull_edge(t, k); visible(e.first, e.second, pp); e = next_hull_edge(e.first, e.second))
      edges.push_back(e);

    std::vector<int> created;
    created.reserve(edges.size());
    for (const auto& [ts, ks] : edges) {
      const int s = T(ts).vertices[next3(ks)];
      const int e = T(ts).vertices[prev3(ks)];
      const int prev = created.empty() ? kBoundary : created.back();
      const int nt = add({s, p, e}, {kBoundary, ts, prev});
      T(ts).neighbors[ks] = nt;
      if (prev != kBoundary) T(prev).neighbors[0] = nt;
      created.push_back(nt);
    }
    last_ = created.front();
    for (int nt : created) legalize(nt, p);
  }

  void legalize(int t0, int p) {
    std::vector<int> stack{t0};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      const int k = index_in(T(t), p);
      if (k < 0) continue;
      const int nb = T(t).neighbors[k];
      if (nb == kBoundary) continue;
      const int a = T(t).vertices[next3(k)];
      const int b = T(t).vertices[prev3(k)];
      const int j = index_in(T(nb), a);
      const int d = T(nb).vertices[next3(j)];  // nb = (a, d, b) cyclically
      if (predicates::incircle(P(p), P(a), P(b), P(d)) <= 0) continue;

      const int n_a1 = T(t).neighbors[prev3(k)];   // across (p, a), opposite b
      const int n_b1 = T(t).neighbors[next3(k)];   // across (b, p), opposite a
      const int n_ad = T(nb).neighbors[prev3(j)];  // across (a, d), opposite b
      const int n_db = T(nb).neighbors[j];         // across (d, b), opposite a

      T(t) = Triangle{{p, a, d}, {n_ad, nb, n_a1}};
      T(nb) = Triangle{{p, d, b}, {n_db, n_b1, t}};
      relink(n_ad, a, d, t);
      relink(n_b1, b, p, nb);
      stack.push_back(t);
      stack.push_back(nb);
    }
  }
};

}  // namespace

Triangulation Triangulation::from_triples(std::vector<Point> points, const std::vector<std::array<int, 3>>& triples) {
  const int n = static_cast<int>(points.size());
  std::vector<Triangle> tris;
  tris.reserve(triples.size());
  std::map<std::pair<int, int>, std::pair<int, int>> directed;  // (u, w) -> (triangle, opposite index)
  for (const auto& tr : triples) {
    Triangle t;
    t.vertices = tr;
    for (int v : tr)
      if (v < 0 || v >= n) throw DomainError("from_triples: vertex index out of range");
    const int o = predicates::orient2d(points[tr[0]], points[tr[1]], points[tr[2]]);
    if (o == 0) throw DomainError("from_triples: degenerate triangle");
    if (o < 0) std::swap(t.vertices[1], t.vertices[2]);
    const int id = static_cast<int>(tris.size());
    for (int i = 0; i < 3; ++i) directed[{t.vertices[next3(i)], t.vertices[prev3(i)]}] = {id, i};
    tris.push_back(t);
  }
  for (auto& [edge, slot] : directed) {
    const auto it = directed.find({edge.second, edge.first});
    if (it != directed.end()) tris[slot.first].neighbors[slot.second] = it->second.first;
  }
  return Triangulation(std::move(points), std::move(tris));
}

std::vector<std::array<int, 2>> Triangulation::edges() const {
  std::set<std::array<int, 2>> seen;
  for (const auto& t : triangles_)
    for (int i = 0; i < 3; ++i) {
      const int a = t.vertices[i];
      const int b = t.vertices[next3(i)];
      seen.insert({std::min(a, b), std::max(a, b)});
    }
  return {seen.begin(), seen.end()};
}

std::size_t Triangulation::hull_vertex_count() const {
  std::set<int> hull;
  for (const auto& t : triangles_)
    for (int i = 0; i < 3; ++i)
      if (t.neighbors[i] == kBoundary) {
        hull.insert(t.vertices[next3(i)]);
        hull.insert(t.vertices[prev3(i)]);
      }
  return hull.size();
}

Triangulation triangulate(std::span<const Point> points, const TriangulateOptions& options) {
  if (points.size() < 3) throw DomainError("triangulate: need at least 3 points");
  for (const auto& p : points)
    if (!is_finite(p)) throw DomainError("triangulate: non-finite coordinate");

  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("triangulate: duplicate points");

  const int n = static_cast<int>(points.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options.seed);
  std::shuffle(order.begin(), order.end(), rng);

  // Bring a non-degenerate triple to the front.
  int third = -1;
  for (int i = 2; i < n; ++i)
    if (predicates::orient2d(points[order[0]], points[order[1]], points[order[i]]) != 0) {
      third = i;
      break;
    }
  if (third < 0) throw DomainError("triangulate: all points are collinear");
  std::rotate(order.begin() + 2, order.begin() + third, order.begin() + third + 1);

  Builder builder(std::vector<Point>(points.begin(), points.end()));
  return builder.run(order);
}

std::vector<DelaunayViolation> validate_delaunay(const Triangulation& t) {
  using Kind = DelaunayViolation::Kind;
  std::vector<DelaunayViolation> out;
  const int n = static_cast<int>(t.points().size());
  const int m = static_cast<int>(t.size());
  std::vector<bool> structural_ok(static_cast<std::size_t>(m), true);

  for (int ti = 0; ti < m; ++ti) {
    const Triangle& tri = t.triangle(ti);
    bool indices_ok = true;
    for (int v : tri.vertices) indices_ok = indices_ok && v >= 0 && v < n;
    if (!indices_ok) {
      out.push_back({Kind::vertex_index, ti, -1});
      structural_ok[ti] = false;
      continue;
    }
    if (predicates::orient2d(t.point(tri.vertices[0]), t.point(tri.vertices[1]), t.point(tri.vertices[2])) <= 0) {
      out.push_back({Kind::orientation, ti, -1});
      structural_ok[ti] = false;
    }
    for (int i = 0; i < 3; ++i) {
      const int nb = tri.neighbors[i];
      if (nb == kBoundary) continue;
      bool reciprocated = false;
      if (nb >= 0 && nb < m) {
        const Triangle& other = t.triangle(nb);
        const int a = tri.vertices[next3(i)];
        const int b = tri.vertices[prev3(i)];
        const int j = index_in(other, b);
        reciprocated = j >= 0 && other.vertices[next3(j)] == a && other.neighbors[prev3(j)] == ti;
      }
      if (!reciprocated) {
        out.push_back({Kind::adjacency, ti, -1});
        break;
      }
    }
  }

  for (int ti = 0; ti < m; ++ti) {
    if (!structural_ok[ti]) continue;
    const Triangle& tri = t.triangle(ti);
    const Point& a = t.point(tri.vertices[0]);
    const Point& b = t.point(tri.vertices[1]);
    const Point& c = t.point(tri.vertices[2]);
    for (int p = 0; p < n; ++p) {
      if (p == tri.vertices[0] || p == tri.vertices[1] || p == tri.vertices[2]) continue;
      if (predicates::incircle(a, b, c, t.point(p)) > 0) out.push_back({Kind::empty_circle, ti, p});
    }
  }
  return out;
}

int incident_triangle(const Triangulation& t, int v) {
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (index_in(t.triangle(i), v) >= 0) return i;
  return -1;
}

namespace {

bool contains_closed(const Triangulation& t, int ti, const Point& q) {
  const auto& v = t.triangle(ti).vertices;
  for (int i = 0; i < 3; ++i)
    if (orient2d(t.point(v[next3(i)]), t.point(v[prev3(i)]), q) < 0) return false;
  return true;
}

// Walk from vertex x towards `target`. When `target_vertex` >= 0 the target is
// that vertex and reaching it as a corner ends the walk.
std::vector<int> walk(const Triangulation& t, int x, const Point& target, int target_vertex) {
  const int n = static_cast<int>(t.points().size());
  if (x < 0 || x >= n) throw DomainError("crossed_triangles: vertex index out of range");
  const Point& px = t.point(x);
  if (px == target) throw DomainError("crossed_triangles: endpoints coincide");

  int start = -1;
  int left = -1, right = -1;
  for (int ti = 0; ti < static_cast<int>(t.size()) && start < 0; ++ti) {
    const auto& v = t.triangle(ti).vertices;
    const int j = index_in(t.triangle(ti), x);
    if (j < 0) continue;
    const int b = v[next3(j)];
    const int c = v[prev3(j)];
    if (target_vertex >= 0 && (b == target_vertex || c == target_vertex)) return {};
    const int ob = orient2d(px, t.point(b), target);
    const int oc = orient2d(px, t.point(c), target);
    if (ob == 0 && dot(t.point(b) - px, target - px) > 0)
      throw DegeneracyError("crossed_triangles: segment passes through vertex " + std::to_string(b), b);
    if (oc == 0 && dot(t.point(c) - px, target - px) > 0)
      throw DegeneracyError("crossed_triangles: segment passes through vertex " + std::to_string(c), c);
    if (ob > 0 && oc < 0) {
      start = ti;
      right = b;
      left = c;
    }
  }
  if (start < 0) throw DomainError("crossed_triangles: target is outside the triangulation");

  std::vector<int> out{start};
  if (target_vertex < 0 && contains_closed(t, start, target)) return out;
  int cur = start;
  for (std::size_t guard = 0; guard <= t.size(); ++guard) {
    const Triangle& tri = t.triangle(cur);
    int next = kBoundary;
    for (int i = 0; i < 3; ++i) {
      const int a = tri.vertices[next3(i)];
      const int b = tri.vertices[prev3(i)];
      if ((a == right && b == left) || (a == left && b == right)) next = tri.neighbors[i];
    }
    if (next == kBoundary) throw DomainError("crossed_triangles: target is outside the triangulation");
    out.push_back(next);
    const Triangle& nt = t.triangle(next);
    int d = -1;
    for (int v : nt.vertices)
      if (v != left && v != right) d = v;
    if (d == target_vertex) return out;
    if (target_vertex < 0 && contains_closed(t, next, target)) return out;
    const int od = orient2d(px, target, t.point(d));
    if (od == 0) throw DegeneracyError("crossed_triangles: segment passes through vertex " + std::to_string(d), d);
    if (od > 0)
      left = d;
    else
      right = d;
    cur = next;
  }
  throw InternalError("crossed_triangles: walk did not terminate");
}

}  // namespace

std::vector<int> crossed_triangles(const Triangulation& t, int x, int y) {
  const int n = static_cast<int>(t.points().size());
  if (y < 0 || y >= n || x == y) throw DomainError("crossed_triangles: need two distinct vertices");
  return walk(t, x, t.point(y), y);
}

std::vector<int> crossed_triangles_towards(const Triangulation& t, int x, Point target) {
  return walk(t, x, target, -1);
}

CrossingResult crossed_triangles_with_jitter(const Triangulation& t, int x, int y) {
  try {
    return {crossed_triangles(t, x, y), false, t.point(y)};
  } catch (const DegeneracyError&) {
  }
  const Point px = t.point(x);
  const Point rel = t.point(y) - px;
  for (double angle : {kCrossingJitterRadians, -kCrossingJitterRadians}) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point moved = px + Point{c * rel.x - s * rel.y, s * rel.x + c * rel.y};
    // Steer by the rotated point but stop on reaching y itself, so hull
    // vertices work even though the rotated point may leave the hull.
    try {
      return {walk(t, x, moved, y), true, moved};
    } catch (const DegeneracyError&) {
    }
  }
  throw DegeneracyError("crossed_triangles: jittered retries also degenerate", -1);
}

}  // namespace dstretch
