#include "dstretch/stretch.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <thread>

#include <json.hpp>

#include "dstretch/errors.hpp"

namespace dstretch {

EdgeGraph EdgeGraph::from_triangulation(const Triangulation& t) {
  EdgeGraph g(t.points().size());
  for (const auto& [a, b] : t.edges()) g.add_edge(a, b, distance(t.point(a), t.point(b)));
  return g;
}

void EdgeGraph::add_edge(int a, int b, double length) {
  const int n = static_cast<int>(adjacency_.size());
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw DomainError("EdgeGraph: bad edge endpoints");
  if (!(length > 0.0)) throw DomainError("EdgeGraph: edge weight must be positive");
  adjacency_[static_cast<std::size_t>(a)].push_back({b, length});
  adjacency_[static_cast<std::size_t>(b)].push_back({a, length});
}

std::vector<double> shortest_path_lengths(const EdgeGraph& g, int src) {
  const std::size_t n = g.vertex_count();
  if (src < 0 || static_cast<std::size_t>(src) >= n) throw DomainError("shortest_path: source out of range");
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(src)] = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    for (const auto& arc : g.arcs(v)) {
      const double nd = d + arc.length;
      if (nd < dist[static_cast<std::size_t>(arc.to)]) {
        dist[static_cast<std::size_t>(arc.to)] = nd;
        heap.emplace(nd, arc.to);
      }
    }
  }
  return dist;
}

std::optional<double> shortest_path_length(const EdgeGraph& g, int src, int dst) {
  if (dst < 0 || static_cast<std::size_t>(dst) >= g.vertex_count())
    throw DomainError("shortest_path: destination out of range");
  const double d = shortest_path_lengths(g, src)[static_cast<std::size_t>(dst)];
  if (d == std::numeric_limits<double>::infinity()) return std::nullopt;
  return d;
}

namespace {

struct Best {
  double ratio = -1.0;
  int i = -1;
  int j = -1;

  void offer(double r, int a, int b) {
    if (r > ratio || (r == ratio && std::pair(a, b) < std::pair(i, j))) {
      ratio = r;
      i = a;
      j = b;
    }
  }
};

}  // namespace

StretchReport stretch_factor(const Triangulation& t, const StretchOptions& options) {
  const int n = static_cast<int>(t.points().size());
  if (n < 2) throw DomainError("stretch_factor: need at least two points");
  const EdgeGraph g = EdgeGraph::from_triangulation(t);

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::vector<Best> partial(threads);

  auto work = [&](unsigned worker) {
    Best& best = partial[worker];
    for (int src = static_cast<int>(worker); src < n; src += static_cast<int>(threads)) {
      const auto dist = shortest_path_lengths(g, src);
      for (int dst = src + 1; dst < n; ++dst) {
        const double d = dist[static_cast<std::size_t>(dst)];
        if (d == std::numeric_limits<double>::infinity())
          throw DomainError("stretch_factor: triangulation graph is disconnected");
        best.offer(d / distance(t.point(src), t.point(dst)), src, dst);
      }
    }
  };

  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Best merged;
  for (const auto& b : partial)
    if (b.i >= 0) merged.offer(b.ratio, b.i, b.j);
  StretchReport report;
  report.n = static_cast<std::size_t>(n);
  report.stretch = std::max(1.0, merged.ratio);
  report.witness = {merged.i, merged.j};
  return report;
}

std::string to_json(const StretchReport& report) {
  nlohmann::ordered_json j;
  j["stretch"] = report.stretch;
  j["witness"] = {report.witness[0], report.witness[1]};
  j["n"] = report.n;
  return j.dump();
}

}  // namespace dstretch
