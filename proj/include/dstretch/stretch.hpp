#pragma once

// Graph shortest paths over triangulation edges and the stretch factor
// (maximum ratio of shortest-path length to Euclidean distance over all
// vertex pairs).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dstretch/delaunay.hpp"

namespace dstretch {

class EdgeGraph {
 public:
  struct Arc {
    int to;
    double length;
  };

  explicit EdgeGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  /// Edge weighted by the Euclidean distance between the two points.
  static EdgeGraph from_triangulation(const Triangulation& t);

  void add_edge(int a, int b, double length);
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<Arc>& arcs(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<std::vector<Arc>> adjacency_;
};

/// Distances from src to every vertex; unreachable vertices hold +inf.
std::vector<double> shortest_path_lengths(const EdgeGraph& g, int src);

/// Shortest path length, or nullopt when dst is unreachable from src.
std::optional<double> shortest_path_length(const EdgeGraph& g, int src, int dst);

struct StretchReport {
  double stretch = 1.0;
  std::array<int, 2> witness{0, 1};
  std::size_t n = 0;
};

struct StretchOptions {
  /// Worker threads over source vertices; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// Exact all-pairs stretch factor (one Dijkstra per source). Ties on the
/// maximum go to the lexicographically smallest witness pair.
StretchReport stretch_factor(const Triangulation& t, const StretchOptions& options = {});

std::string to_json(const StretchReport& report);

}  // namespace dstretch
