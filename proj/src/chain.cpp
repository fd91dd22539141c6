#include "dstretch/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "dstretch/errors.hpp"
#include "dstretch/predicates.hpp"

namespace dstretch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Counterclockwise angle from `from` to `to`, in [0, 2*pi).
double ccw_sweep(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

double unsigned_angle(Point u, Point v) { return std::abs(std::atan2(cross(u, v), dot(u, v))); }

ConnectingArc connecting_arc(const Circle& self, const Circle& other, Point touch) {
  const Point to_other = other.center - self.center;
  return {polar_angle(self.center, other.center), unsigned_angle(to_other, touch - self.center)};
}

}  // namespace

Chain make_chain(std::vector<Circle> circles) {
  if (circles.empty()) throw ChainError(ChainError::Kind::empty, -1, "chain: no circles");
  for (const auto& c : circles) checked_circle(c.center, c.radius);
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (std::size_t j = i + 1; j < circles.size(); ++j)
      if (circles[i] == circles[j])
        throw ChainError(ChainError::Kind::duplicate, static_cast<int>(j),
                         "chain: circles " + std::to_string(i) + " and " + std::to_string(j) + " are identical");

  Chain chain;
  chain.circles_ = std::move(circles);
  const auto& cs = chain.circles_;
  for (std::size_t j = 0; j + 1 < cs.size(); ++j) {
    const IntersectionResult hit = circle_intersection(cs[j], cs[j + 1]);
    if (hit.kind == IntersectionResult::Kind::none)
      throw ChainError(ChainError::Kind::not_intersecting, static_cast<int>(j),
                       "chain: circles " + std::to_string(j) + " and " + std::to_string(j + 1) +
                           " share no boundary point");
    Joint joint{hit.points[0], hit.points[1], hit.kind == IntersectionResult::Kind::tangent};
    chain.joints_.push_back(joint);
    chain.next_arc_.push_back(connecting_arc(cs[j], cs[j + 1], joint.a));
    chain.prev_arc_.push_back(connecting_arc(cs[j + 1], cs[j], joint.a));
  }

  for (std::size_t i = 1; i + 1 < cs.size(); ++i) {
    const ConnectingArc& p = chain.toward_prev(i);
    const ConnectingArc& n = chain.toward_next(i);
    const double gap = std::abs(Angle(n.center_angle - p.center_angle).value());
    if (p.half_width + n.half_width > gap + kArcAngleTolerance)
      throw ChainError(ChainError::Kind::overlapping_arcs, static_cast<int>(i),
                       "chain: connecting arcs overlap on circle " + std::to_string(i));
  }
  return chain;
}

Chain Chain::prefix(std::size_t count) const {
  if (count == 0 || count > circles_.size()) throw DomainError("chain prefix: bad length");
  Chain out;
  out.circles_.assign(circles_.begin(), circles_.begin() + static_cast<std::ptrdiff_t>(count));
  out.joints_.assign(joints_.begin(), joints_.begin() + static_cast<std::ptrdiff_t>(count - 1));
  out.next_arc_.assign(next_arc_.begin(), next_arc_.begin() + static_cast<std::ptrdiff_t>(count - 1));
  out.prev_arc_.assign(prev_arc_.begin(), prev_arc_.begin() + static_cast<std::ptrdiff_t>(count - 1));
  return out;
}

Chain reverse(const Chain& chain) {
  std::vector<Circle> cs(chain.circles().rbegin(), chain.circles().rend());
  return make_chain(std::move(cs));
}

AngularRange terminal_range(const Chain& chain, bool first) {
  if (chain.size() == 1) return {0.0, kTwoPi};
  const ConnectingArc& c = first ? chain.toward_next(0) : chain.toward_prev(chain.size() - 1);
  return {c.center_angle + c.half_width, std::max(0.0, kTwoPi - 2.0 * c.half_width)};
}

namespace {

double snap_angle(const Circle& c, Point p, const char* name) {
  const double r = distance(c.center, p);
  if (!is_finite(p) || std::abs(r - c.radius) > kTerminalSnapTolerance * c.radius)
    throw ChainError(ChainError::Kind::terminal, -1, std::string("terminal ") + name + " is not on its circle");
  if (r == 0.0) throw ChainError(ChainError::Kind::terminal, -1, std::string("terminal ") + name + " at center");
  return polar_angle(c.center, p);
}

void check_outside_neighbor(const ConnectingArc& arc, double angle, const char* name) {
  if (std::abs(Angle(angle - arc.center_angle).value()) < arc.half_width - kArcAngleTolerance)
    throw ChainError(ChainError::Kind::terminal, -1,
                     std::string("terminal ") + name + " lies inside the neighboring circle");
}

}  // namespace

TerminalPair terminals_at(const Chain& chain, double u_angle, double v_angle) {
  const Circle& first = chain.circle(0);
  const Circle& last = chain.circle(chain.size() - 1);
  TerminalPair t;
  t.u_angle = Angle(u_angle).value();
  t.v_angle = Angle(v_angle).value();
  if (chain.size() > 1) {
    check_outside_neighbor(chain.toward_next(0), t.u_angle, "u");
    check_outside_neighbor(chain.toward_prev(chain.size() - 1), t.v_angle, "v");
  }
  t.u = first.at(t.u_angle);
  t.v = last.at(t.v_angle);
  return t;
}

TerminalPair make_terminals(const Chain& chain, Point u, Point v) {
  const double ua = snap_angle(chain.circle(0), u, "u");
  const double va = snap_angle(chain.circle(chain.size() - 1), v, "v");
  TerminalPair t = terminals_at(chain, ua, va);
  // Keep caller coordinates when they are already on the circle, so that
  // exact terminals (Delaunay vertices) are not perturbed by the round trip.
  if (std::abs(distance(chain.circle(0).center, u) - chain.circle(0).radius) <= 1e-12 * chain.circle(0).radius)
    t.u = u;
  const Circle& last = chain.circle(chain.size() - 1);
  if (std::abs(distance(last.center, v) - last.radius) <= 1e-12 * last.radius) t.v = v;
  return t;
}

ArcDecomposition arcs(const Chain& chain, const TerminalPair& t) {
  const std::size_t n = chain.size();
  ArcDecomposition out;
  auto make_arc = [&](std::size_t i, double start, double sweep, Point prev_end, Point next_end) {
    sweep = std::max(0.0, sweep);
    return ChainArc{i, start, sweep, chain.circle(i).radius * sweep, prev_end, next_end};
  };

  if (n == 1) {
    const double a_sweep = t.u == t.v ? 0.0 : ccw_sweep(t.v_angle, t.u_angle);
    out.a_arcs.push_back(make_arc(0, t.v_angle, a_sweep, t.u, t.v));
    out.b_arcs.push_back(make_arc(0, t.u_angle, t.u == t.v ? 0.0 : kTwoPi - a_sweep, t.u, t.v));
    return out;
  }

  for (std::size_t j = 0; j + 1 < n; ++j) out.gate_lengths.push_back(distance(chain.joint(j).a, chain.joint(j).b));

  for (std::size_t i = 0; i < n; ++i) {
    const Point a_prev = i == 0 ? t.u : chain.joint(i - 1).a;
    const Point b_prev = i == 0 ? t.u : chain.joint(i - 1).b;
    const Point a_next = i + 1 == n ? t.v : chain.joint(i).a;
    const Point b_next = i + 1 == n ? t.v : chain.joint(i).b;

    if (i == 0) {
      const ConnectingArc& nx = chain.toward_next(0);
      const double ang = Angle(t.u_angle - nx.center_angle).value();
      const double a_sweep = ang >= 0.0 ? ang - nx.half_width : ang + kTwoPi - nx.half_width;
      const double b_sweep = ang >= 0.0 ? kTwoPi - nx.half_width - ang : -ang - nx.half_width;
      out.a_arcs.push_back(make_arc(i, nx.center_angle + nx.half_width, a_sweep, a_prev, a_next));
      out.b_arcs.push_back(make_arc(i, t.u_angle, b_sweep, b_prev, b_next));
    } else if (i + 1 == n) {
      const ConnectingArc& pv = chain.toward_prev(i);
      const double ang = Angle(t.v_angle - pv.center_angle).value();
      const double a_sweep = ang >= 0.0 ? kTwoPi - ang - pv.half_width : -ang - pv.half_width;
      const double b_sweep = ang >= 0.0 ? ang - pv.half_width : kTwoPi + ang - pv.half_width;
      out.a_arcs.push_back(make_arc(i, t.v_angle, a_sweep, a_prev, a_next));
      out.b_arcs.push_back(make_arc(i, pv.center_angle + pv.half_width, b_sweep, b_prev, b_next));
    } else {
      const ConnectingArc& pv = chain.toward_prev(i);
      const ConnectingArc& nx = chain.toward_next(i);
      const double between = ccw_sweep(nx.center_angle, pv.center_angle);
      const double widths = pv.half_width + nx.half_width;
      out.a_arcs.push_back(make_arc(i, nx.center_angle + nx.half_width, between - widths, a_prev, a_next));
      out.b_arcs.push_back(
          make_arc(i, pv.center_angle + pv.half_width, kTwoPi - between - widths, b_prev, b_next));
    }
  }
  return out;
}

namespace {

double turn(Point o, Point p, Point q) { return cross(p - o, q - o); }

struct Portal {
  Point left;
  Point right;
};

// Funnel (string pulling) over portals; returns path vertices with the index
// of the portal each one came from.
std::vector<std::pair<Point, std::size_t>> pull_string(const std::vector<Portal>& portals) {
  std::vector<std::pair<Point, std::size_t>> path;
  Point apex = portals[0].left;
  Point left = portals[0].left;
  Point right = portals[0].right;
  std::size_t apex_index = 0, left_index = 0, right_index = 0;
  path.emplace_back(apex, 0);

  for (std::size_t i = 1; i < portals.size(); ++i) {
    const Point& l = portals[i].left;
    const Point& r = portals[i].right;

    if (turn(apex, right, r) >= 0.0) {
      if (apex == right || turn(apex, left, r) < 0.0) {
        right = r;
        right_index = i;
      } else {
        apex = left;
        apex_index = left_index;
        path.emplace_back(apex, apex_index);
        left = right = apex;
        left_index = right_index = apex_index;
        i = apex_index;
        continue;
      }
    }

    if (turn(apex, left, l) <= 0.0) {
      if (apex == left || turn(apex, right, l) > 0.0) {
        left = l;
        left_index = i;
      } else {
        apex = right;
        apex_index = right_index;
        path.emplace_back(apex, apex_index);
        left = right = apex;
        left_index = right_index = apex_index;
        i = apex_index;
        continue;
      }
    }
  }
  const std::size_t last = portals.size() - 1;
  if (path.back().second != last) path.emplace_back(portals[last].left, last);
  return path;
}

}  // namespace

RubberBand rubber_band(const Chain& chain, const TerminalPair& t) {
  const std::size_t gates = chain.size() - 1;
  std::vector<Portal> portals;
  portals.reserve(gates + 2);
  portals.push_back({t.u, t.u});
  for (const auto& j : chain.joints()) portals.push_back({j.a, j.b});
  portals.push_back({t.v, t.v});

  const auto path = pull_string(portals);
  RubberBand band;
  for (const auto& [p, idx] : path) band.vertices.push_back(p);
  for (std::size_t k = 0; k + 1 < band.vertices.size(); ++k)
    band.length += distance(band.vertices[k], band.vertices[k + 1]);
  band.bent = band.vertices.size() > 2;

  band.gate_points.resize(gates);
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const Point w0 = path[s].first;
    const Point w1 = path[s + 1].first;
    const Point dir = w1 - w0;
    for (std::size_t portal = path[s].second; portal <= path[s + 1].second; ++portal) {
      if (portal == 0 || portal == gates + 1) continue;
      const std::size_t j = portal - 1;
      const Joint& joint = chain.joint(j);
      Point p;
      if (portal == path[s].second) {
        p = w0;
      } else if (portal == path[s + 1].second) {
        p = w1;
      } else {
        const Point g = joint.b - joint.a;
        const double denom = cross(g, dir);
        double param = denom == 0.0 ? 0.0 : cross(w0 - joint.a, dir) / denom;
        param = std::clamp(param, 0.0, 1.0);
        p = joint.a + param * g;
      }
      band.gate_points[j] = p;
    }
  }

  for (std::size_t j = 0; j < gates; ++j) {
    const Joint& joint = chain.joint(j);
    const double scale = std::max(chain.circle(j).radius, chain.circle(j + 1).radius);
    const double tol = 1e-9 * scale;
    const Point p = band.gate_points[j];
    if (distance(p, joint.a) <= tol || distance(p, joint.b) <= tol) {
      band.obstructed = true;
      band.witnesses.push_back(static_cast<int>(j));
    }
  }
  return band;
}

bool stab_order(const Chain& chain, const TerminalPair& t) {
  if (rubber_band(chain, t).obstructed) throw DomainError("stab_order: terminals are obstructed");
  const double len = distance(t.u, t.v);
  if (len == 0.0) throw DomainError("stab_order: terminals coincide");
  const Point d = (1.0 / len) * (t.v - t.u);
  constexpr double tol = 1e-9;

  std::vector<double> entry, exit;
  for (const auto& c : chain.circles()) {
    const Point rel = t.u - c.center;
    const double b = dot(d, rel);
    const double disc = b * b - (dot(rel, rel) - c.radius * c.radius);
    if (disc < -tol * c.radius * c.radius) return false;
    const double root = std::sqrt(std::max(0.0, disc));
    entry.push_back((-b - root) / len);
    exit.push_back((-b + root) / len);
  }
  for (std::size_t i = 0; i < entry.size(); ++i)
    for (std::size_t j = i + 1; j < entry.size(); ++j)
      if (entry[i] > entry[j] + tol || exit[i] > exit[j] + tol) return false;
  return true;
}

ArcPath arc_path(const Chain& chain, const TerminalPair& t) {
  const std::size_t n = chain.size();
  const ArcDecomposition dec = arcs(chain, t);

  // Vertex ids: 0 = u, 1 = v, 2 + 2j = a_j, 3 + 2j = b_j.
  const std::size_t vertex_count = 2 + 2 * (n - 1);
  auto a_id = [&](std::size_t i) -> std::size_t { return i == 0 ? 0 : i == n ? 1 : 2 + 2 * (i - 1); };
  auto b_id = [&](std::size_t i) -> std::size_t { return i == 0 ? 0 : i == n ? 1 : 3 + 2 * (i - 1); };

  struct Edge {
    std::size_t to;
    PathEdge label;
  };
  std::vector<std::vector<Edge>> adj(vertex_count);
  auto connect = [&](std::size_t x, std::size_t y, PathEdge e) {
    adj[x].push_back({y, e});
    adj[y].push_back({x, e});
  };
  for (std::size_t i = 0; i < n; ++i) {
    connect(a_id(i), a_id(i + 1), {PathEdge::Kind::arc_a, i, dec.a_arcs[i].length});
    connect(b_id(i), b_id(i + 1), {PathEdge::Kind::arc_b, i, dec.b_arcs[i].length});
  }
  for (std::size_t j = 0; j + 1 < n; ++j) connect(a_id(j + 1), b_id(j + 1), {PathEdge::Kind::gate, j, dec.gate_lengths[j]});

  std::vector<double> dist(vertex_count, std::numeric_limits<double>::infinity());
  std::vector<std::pair<std::size_t, PathEdge>> pred(vertex_count);
  std::vector<bool> has_pred(vertex_count, false);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0.0;
  heap.emplace(0.0, 0);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (const auto& e : adj[x]) {
      const double nd = d + e.label.length;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        pred[e.to] = {x, e.label};
        has_pred[e.to] = true;
        heap.emplace(nd, e.to);
      }
    }
  }

  ArcPath path;
  path.length = dist[1];
  for (std::size_t x = 1; x != 0 && has_pred[x]; x = pred[x].first) path.edges.push_back(pred[x].second);
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

namespace {

double ratio_at(const Chain& chain, double ua, double va) {
  const TerminalPair t = terminals_at(chain, ua, va);
  const double d = rubber_band(chain, t).length;
  const double scale = std::max(chain.circle(0).radius, chain.circle(chain.size() - 1).radius);
  if (d <= 1e-12 * scale) return 0.0;
  return arc_path(chain, t).length / d;
}

// Golden-section maximization of a unimodal-ish function on [lo, hi]; returns
// the best abscissa seen (including the starting guess).
template <typename F>
std::pair<double, double> golden_max(F f, double lo, double hi, double guess, double guess_value, int iters) {
  constexpr double inv_phi = 0.6180339887498949;
  double best_x = guess, best_v = guess_value;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int k = 0; k < iters; ++k) {
    if (f1 > best_v) best_v = f1, best_x = x1;
    if (f2 > best_v) best_v = f2, best_x = x2;
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  if (f1 > best_v) best_v = f1, best_x = x1;
  if (f2 > best_v) best_v = f2, best_x = x2;
  return {best_x, best_v};
}

}  // namespace

ChainStretchEstimate chain_stretch(const Chain& chain, std::size_t samples_per_arc, std::size_t refine_iters) {
  if (samples_per_arc < 8) throw DomainError("chain_stretch: need at least 8 samples per arc");
  const AngularRange ur = terminal_range(chain, true);
  const AngularRange vr = terminal_range(chain, false);
  const double ustep = ur.sweep / static_cast<double>(samples_per_arc);
  const double vstep = vr.sweep / static_cast<double>(samples_per_arc);

  double best = -1.0;
  double best_u = ur.start, best_v = vr.start;
  for (std::size_t i = 0; i <= samples_per_arc; ++i) {
    const double ua = ur.start + static_cast<double>(i) * ustep;
    for (std::size_t j = 0; j <= samples_per_arc; ++j) {
      const double va = vr.start + static_cast<double>(j) * vstep;
      const double r = ratio_at(chain, ua, va);
      if (r > best) {
        best = r;
        best_u = ua;
        best_v = va;
      }
    }
  }

  for (std::size_t round = 0; round < refine_iters; ++round) {
    const double ulo = std::max(ur.start, best_u - ustep), uhi = std::min(ur.start + ur.sweep, best_u + ustep);
    auto [nu, val_u] = golden_max([&](double a) { return ratio_at(chain, a, best_v); }, ulo, uhi, best_u, best, 24);
    best_u = nu;
    best = val_u;
    const double vlo = std::max(vr.start, best_v - vstep), vhi = std::min(vr.start + vr.sweep, best_v + vstep);
    auto [nv, val_v] = golden_max([&](double a) { return ratio_at(chain, best_u, a); }, vlo, vhi, best_v, best, 24);
    best_v = nv;
    best = val_v;
  }
  return {best, terminals_at(chain, best_u, best_v)};
}

TriangulationChain chain_from_triangulation(const Triangulation& t, int x, int y, bool allow_jitter) {
  TriangulationChain out;
  if (allow_jitter) {
    CrossingResult crossing = crossed_triangles_with_jitter(t, x, y);
    out.triangles = std::move(crossing.triangles);
    out.jittered = crossing.jittered;
  } else {
    out.triangles = crossed_triangles(t, x, y);
  }
  if (out.triangles.empty()) return out;

  std::vector<Circle> circles;
  for (int ti : out.triangles) {
    const auto& v = t.triangle(ti).vertices;
    const Circle c = circumcircle(t.point(v[0]), t.point(v[1]), t.point(v[2]));
    if (!circles.empty()) {
      const Circle& prev = circles.back();
      const double tol = 1e-9 * std::max(prev.radius, c.radius);
      if (distance(prev.center, c.center) <= tol && std::abs(prev.radius - c.radius) <= tol) continue;
    }
    circles.push_back(c);
  }
  try {
    out.chain = make_chain(std::move(circles));
    out.terminals = make_terminals(*out.chain, t.point(x), t.point(y));
  } catch (const ChainError& e) {
    throw InternalError(std::string("chain_from_triangulation: crossed circumcircles do not form a chain: ") +
                        e.what());
  }
  return out;
}

}  // namespace dstretch
