#pragma once

// Seeded experiment drivers behind the command-line tool: stretch factors
// of random Delaunay triangulations, property checks over random chains,
// the triangulation-to-chain reduction, and a near-circular point set with a
// large measured stretch factor.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dstretch/chain.hpp"
#include "dstretch/constants.hpp"
#include "dstretch/stretch.hpp"

namespace dstretch {

/// Parallel map over [0, count) with `threads` workers (0 = hardware
/// concurrency). Exceptions from `body` are rethrown after all workers stop.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body);

/// Worker count from STRETCH_THREADS, falling back to `fallback`.
/// Throws DomainError if the variable is set but not a non-negative integer.
unsigned threads_from_env(unsigned fallback = 1);

struct ExperimentRecord {
  std::uint64_t seed = 0;  // seed of this trial's point set
  std::size_t n = 0;
  std::size_t trial = 0;
  double stretch = 1.0;
  std::array<int, 2> witness{0, 1};
  double runtime_ms = 0.0;
};

/// `trials` point sets of n uniform points in the unit square. Trial k uses
/// derive_seed(seed, k), so rows do not depend on the thread count.
std::vector<ExperimentRecord> random_trials(std::size_t n, std::size_t trials, std::uint64_t seed,
                                            unsigned threads = 1);

struct ChainSuiteOptions {
  std::size_t count = 1000;
  std::size_t max_n = 6;  // chain sizes are uniform on 1..max_n
  std::uint64_t seed = 7;
  std::size_t terminal_samples = 64;
  std::size_t stretch_samples = 16;  // grid for chain_stretch
  std::size_t refine_iters = 1;
  unsigned threads = 1;
  PotentialConstants constants = kDefaultConstants;
};

/// Aggregated property checks. A violation counter counts (chain, terminal
/// pair) instances for the per-pair properties and chains or joints for the
/// others.
struct ChainSuiteSummary {
  std::size_t chains = 0;
  std::size_t instances = 0;     // sampled terminal pairs
  std::size_t unobstructed = 0;  // pairs on which the order of stabbing was checked
  std::size_t joints = 0;
  std::size_t degenerate_joints = 0;

  std::size_t upsilon_violations = 0;  // target function >= 0
  std::size_t ratio_violations = 0;    // |P| / |D| >= rho
  std::size_t order_violations = 0;    // unobstructed but not stabbed in order
  std::size_t travel_violations = 0;   // H off the center distance or V below |dr|
  std::size_t prefix_violations = 0;   // potential above that of the prefix chain

  double max_upsilon = -std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  double max_stretch_estimate = 0.0;
  double max_horizontal_error = 0.0;  // relative
  double min_vertical_slack = std::numeric_limits<double>::infinity();
  double max_prefix_increase = -std::numeric_limits<double>::infinity();

  std::optional<std::size_t> worst_chain;  // index of the chain with max_upsilon

  bool ok() const {
    return upsilon_violations == 0 && ratio_violations == 0 && order_violations == 0 && travel_violations == 0 &&
           prefix_violations == 0;
  }
};

/// Property checks for one chain over the given terminal pairs. The chain
/// stretch estimate is skipped when stretch_samples is 0.
ChainSuiteSummary check_chain(const Chain& chain, const std::vector<TerminalPair>& terminals,
                              const ChainSuiteOptions& options);

/// Folds `part` (for the chain with global index `index`) into `total`.
void merge(ChainSuiteSummary& total, const ChainSuiteSummary& part, std::size_t index);

ChainSuiteSummary run_chain_suite(const ChainSuiteOptions& options);

/// Chain quantities at one terminal pair.
struct ChainEvaluation {
  TerminalPair terminals;
  double arc_path = 0.0;
  double rubber_band = 0.0;
  bool obstructed = false;
  double potential = 0.0;
  double upsilon = 0.0;
};

ChainEvaluation evaluate(const Chain& chain, const TerminalPair& t,
                         const PotentialConstants& constants = kDefaultConstants);

std::string to_json(const ChainSuiteSummary& summary, const std::optional<ChainEvaluation>& fixture = std::nullopt);

struct ReductionSummary {
  std::size_t instances = 0;
  std::size_t pairs = 0;
  std::size_t jittered = 0;
  std::size_t chain_failures = 0;       // reduction threw
  std::size_t obstructed = 0;           // rubber band bent at a gate endpoint
  std::size_t length_mismatches = 0;    // |D| differs from |xy| beyond 1e-9 relative
  std::size_t path_violations = 0;      // graph distance above |P| + 1e-9
  double max_graph_over_arc = 0.0;      // max graph distance / |P|
  bool ok() const {
    return chain_failures == 0 && obstructed == 0 && length_mismatches == 0 && path_violations == 0;
  }
};

/// For each of `instances` random n-point sets, picks `pairs_per_instance`
/// random non-adjacent vertex pairs and checks the chain reduction against
/// the triangulation's shortest paths.
ReductionSummary reduction_check(std::size_t instances, std::size_t n, std::size_t pairs_per_instance,
                                 std::uint64_t seed, unsigned threads = 1);

/// n points near the unit circle: angle 2*pi*(k + 0.3)/n and radius
/// 1 - 0.01 * sin^2(angle). The offset keeps the set free of mirror
/// symmetry and of four cocircular points.
std::vector<Point> lowerbound_points(std::size_t n);

}  // namespace dstretch

#include "dstretch/detail/parallel_for.hpp"
