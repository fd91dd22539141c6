#include "dstretch/experiments.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <random>
#include <set>
#include <string_view>

#include <json.hpp>

#include "dstretch/errors.hpp"
#include "dstretch/potential.hpp"
#include "dstretch/random_chain.hpp"

namespace dstretch {

unsigned threads_from_env(unsigned fallback) {
  const char* raw = std::getenv("STRETCH_THREADS");
  if (raw == nullptr || *raw == '\0') return fallback;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end)
    throw DomainError("STRETCH_THREADS must be a non-negative integer, got '" + std::string(raw) + "'");
  return value;
}

std::vector<ExperimentRecord> random_trials(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (n < 3) throw DomainError("random trials need n >= 3");
  if (trials == 0) throw DomainError("random trials need at least one trial");
  std::vector<ExperimentRecord> records(trials);
  parallel_for(trials, threads, [&](std::size_t k) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentRecord& rec = records[k];
    rec.seed = derive_seed(seed, k);
    rec.n = n;
    rec.trial = k;
    std::mt19937_64 rng(rec.seed);
    const std::vector<Point> pts = random_points(n, rng);
    const Triangulation t = triangulate(pts, {.seed = rec.seed});
    const StretchReport report = stretch_factor(t);
    rec.stretch = report.stretch;
    rec.witness = report.witness;
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });
  return records;
}

ChainEvaluation evaluate(const Chain& chain, const TerminalPair& t, const PotentialConstants& constants) {
  ChainEvaluation ev;
  ev.terminals = t;
  ev.arc_path = arc_path(chain, t).length;
  const RubberBand band = rubber_band(chain, t);
  ev.rubber_band = band.length;
  ev.obstructed = band.obstructed;
  ev.potential = potential(chain, constants);
  ev.upsilon = ev.arc_path - constants.lambda * ev.rubber_band + ev.potential;
  return ev;
}

ChainSuiteSummary check_chain(const Chain& chain, const std::vector<TerminalPair>& terminals,
                              const ChainSuiteOptions& options) {
  constexpr double kTol = 1e-9;
  const PotentialConstants& k = options.constants;
  const std::size_t n = chain.size();
  ChainSuiteSummary s;
  s.chains = 1;

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Circle& prev = chain.circle(j);
    const Circle& cur = chain.circle(j + 1);
    const PeakDecomposition pd = peak_decomposition(prev, cur, chain.joint(j).a);
    const double d = distance(prev.center, cur.center);
    const double h_err = std::abs(pd.horizontal - d) / d;
    const double v_slack = pd.vertical - std::abs(cur.radius - prev.radius);
    ++s.joints;
    if (pd.degenerate) ++s.degenerate_joints;
    if (h_err > kTol || v_slack < -kTol) ++s.travel_violations;
    s.max_horizontal_error = std::max(s.max_horizontal_error, h_err);
    s.min_vertical_slack = std::min(s.min_vertical_slack, v_slack);
  }

  const double phi_chain = potential(chain, k);
  if (n >= 2) {
    const double increase = phi_chain - potential(chain.prefix(n - 1), k);
    s.max_prefix_increase = increase;
    if (increase > kTol) ++s.prefix_violations;
  }

  const double scale = std::max(chain.circle(0).radius, chain.circle(n - 1).radius);
  for (const TerminalPair& t : terminals) {
    ++s.instances;
    const double p = arc_path(chain, t).length;
    const RubberBand band = rubber_band(chain, t);
    const double ups = p - k.lambda * band.length + phi_chain;
    s.max_upsilon = std::max(s.max_upsilon, ups);
    if (ups >= 0.0) ++s.upsilon_violations;
    if (band.length > 1e-12 * scale) {
      const double ratio = p / band.length;
      s.max_ratio = std::max(s.max_ratio, ratio);
      if (ratio >= k.rho) ++s.ratio_violations;
    }
    if (!band.obstructed) {
      ++s.unobstructed;
      if (!stab_order(chain, t)) ++s.order_violations;
    }
  }

  if (options.stretch_samples > 0) {
    const double est = chain_stretch(chain, options.stretch_samples, options.refine_iters).estimate;
    s.max_stretch_estimate = est;
    if (est >= k.rho) ++s.ratio_violations;
  }
  return s;
}

void merge(ChainSuiteSummary& total, const ChainSuiteSummary& part, std::size_t index) {
  total.chains += part.chains;
  total.instances += part.instances;
  total.unobstructed += part.unobstructed;
  total.joints += part.joints;
  total.degenerate_joints += part.degenerate_joints;
  total.upsilon_violations += part.upsilon_violations;
  total.ratio_violations += part.ratio_violations;
  total.order_violations += part.order_violations;
  total.travel_violations += part.travel_violations;
  total.prefix_violations += part.prefix_violations;
  if (part.max_upsilon > total.max_upsilon) {
    total.max_upsilon = part.max_upsilon;
    total.worst_chain = index;
  }
  total.max_ratio = std::max(total.max_ratio, part.max_ratio);
  total.max_stretch_estimate = std::max(total.max_stretch_estimate, part.max_stretch_estimate);
  total.max_horizontal_error = std::max(total.max_horizontal_error, part.max_horizontal_error);
  total.min_vertical_slack = std::min(total.min_vertical_slack, part.min_vertical_slack);
  total.max_prefix_increase = std::max(total.max_prefix_increase, part.max_prefix_increase);
}

ChainSuiteSummary run_chain_suite(const ChainSuiteOptions& options) {
  if (options.count == 0) throw DomainError("chain suite: count must be positive");
  if (options.max_n < 2) throw DomainError("chain suite: max_n must be at least 2");
  std::vector<ChainSuiteSummary> parts(options.count);
  parallel_for(options.count, options.threads, [&](std::size_t i) {
    std::mt19937_64 rng(derive_seed(options.seed, i));
    std::uniform_int_distribution<std::size_t> size(1, options.max_n);
    const Chain chain = random_chain(size(rng), rng);
    std::vector<TerminalPair> terminals;
    terminals.reserve(options.terminal_samples);
    for (std::size_t k = 0; k < options.terminal_samples; ++k) terminals.push_back(random_terminals(chain, rng));
    parts[i] = check_chain(chain, terminals, options);
  });
  ChainSuiteSummary total;
  for (std::size_t i = 0; i < parts.size(); ++i) merge(total, parts[i], i);
  return total;
}

namespace {

nlohmann::ordered_json finite_or_null(double x) {
  return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string to_json(const ChainSuiteSummary& s, const std::optional<ChainEvaluation>& fixture) {
  nlohmann::ordered_json j;
  j["ok"] = s.ok();
  j["chains"] = s.chains;
  j["instances"] = s.instances;
  j["unobstructed"] = s.unobstructed;
  j["joints"] = s.joints;
  j["degenerate_joints"] = s.degenerate_joints;
  j["violations"] = {{"upsilon", s.upsilon_violations},
                     {"ratio", s.ratio_violations},
                     {"stab_order", s.order_violations},
                     {"travel", s.travel_violations},
                     {"potential_prefix", s.prefix_violations}};
  j["max_upsilon"] = finite_or_null(s.max_upsilon);
  j["max_ratio"] = s.max_ratio;
  j["max_stretch_estimate"] = s.max_stretch_estimate;
  j["max_horizontal_error"] = s.max_horizontal_error;
  j["min_vertical_slack"] = finite_or_null(s.min_vertical_slack);
  j["max_prefix_increase"] = finite_or_null(s.max_prefix_increase);
  j["worst_chain"] = s.worst_chain ? nlohmann::ordered_json(*s.worst_chain) : nlohmann::ordered_json(nullptr);
  if (fixture) {
    const ChainEvaluation& f = *fixture;
    j["fixture"] = {{"u", {f.terminals.u.x, f.terminals.u.y}},
                    {"v", {f.terminals.v.x, f.terminals.v.y}},
                    {"arc_path", f.arc_path},
                    {"rubber_band", f.rubber_band},
                    {"obstructed", f.obstructed},
                    {"potential", f.potential},
                    {"upsilon", f.upsilon}};
  }
  return j.dump();
}

ReductionSummary reduction_check(std::size_t instances, std::size_t n, std::size_t pairs_per_instance,
                                 std::uint64_t seed, unsigned threads) {
  if (n < 4) throw DomainError("reduction check needs n >= 4");
  std::vector<ReductionSummary> parts(instances);
  parallel_for(instances, threads, [&](std::size_t i) {
    ReductionSummary& s = parts[i];
    s.instances = 1;
    std::mt19937_64 rng(derive_seed(seed, i));
    const std::vector<Point> pts = random_points(n, rng);
    const Triangulation t = triangulate(pts, {.seed = derive_seed(seed, i)});
    const EdgeGraph g = EdgeGraph::from_triangulation(t);
    const auto edge_list = t.edges();
    const std::set<std::array<int, 2>> edges(edge_list.begin(), edge_list.end());
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);

    for (std::size_t k = 0, draws = 0; k < pairs_per_instance && draws < 100 * pairs_per_instance; ++draws) {
      int x = pick(rng), y = pick(rng);
      if (x == y || edges.contains({std::min(x, y), std::max(x, y)})) continue;
      ++k;
      ++s.pairs;
      TriangulationChain tc;
      try {
        tc = chain_from_triangulation(t, x, y, true);
      } catch (const std::exception&) {
        ++s.chain_failures;
        continue;
      }
      if (tc.jittered) ++s.jittered;
      if (!tc.chain || !tc.terminals) {
        ++s.chain_failures;
        continue;
      }
      const RubberBand band = rubber_band(*tc.chain, *tc.terminals);
      const double xy = distance(t.point(x), t.point(y));
      if (band.obstructed) ++s.obstructed;
      if (std::abs(band.length - xy) > 1e-9 * xy) ++s.length_mismatches;
      const double p = arc_path(*tc.chain, *tc.terminals).length;
      const double graph = shortest_path_lengths(g, x)[static_cast<std::size_t>(y)];
      if (!(graph <= p + 1e-9)) ++s.path_violations;
      s.max_graph_over_arc = std::max(s.max_graph_over_arc, graph / p);
    }
  });
  ReductionSummary total;
  for (const auto& s : parts) {
    total.instances += s.instances;
    total.pairs += s.pairs;
    total.jittered += s.jittered;
    total.chain_failures += s.chain_failures;
    total.obstructed += s.obstructed;
    total.length_mismatches += s.length_mismatches;
    total.path_violations += s.path_violations;
    total.max_graph_over_arc = std::max(total.max_graph_over_arc, s.max_graph_over_arc);
  }
  return total;
}

std::vector<Point> lowerbound_points(std::size_t n) {
  if (n < 3) throw DomainError("lowerbound: need at least 3 points");
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.3) / static_cast<double>(n);
    const double s = std::sin(theta);
    const double r = 1.0 - 0.01 * s * s;
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return pts;
}

}  // namespace dstretch
