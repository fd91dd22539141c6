#include "dstretch/cli.hpp"

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dstretch/chain.hpp"
#include "dstretch/errors.hpp"
#include "dstretch/experiments.hpp"
#include "dstretch/io.hpp"
#include "dstretch/random_chain.hpp"
#include "dstretch/stretch.hpp"
#include "dstretch/verifier.hpp"

namespace dstretch {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr const char* kRandomFooter =
    "CSV columns (one row per trial, then one summary row):\n"
    "  kind       'trial', or 'max' for the summary row\n"
    "  seed       seed of the trial's point set (derived from --seed and the trial index)\n"
    "  n          number of points\n"
    "  trial      trial index; on the summary row, the trial attaining the maximum\n"
    "  stretch    stretch factor, 17 significant digits\n"
    "  witness_i  first vertex of the pair attaining the stretch factor\n"
    "  witness_j  second vertex (witness_i < witness_j)\n"
    "  runtime_ms wall time of the trial, only with --timing\n"
    "Exit code 1 if some stretch factor falls outside [1, 1.998).";

std::string fixed17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Flags {
  std::string input;
  std::size_t n = 50;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::uint64_t suite_seed = 7;
  std::size_t lower_n = 64;
  std::size_t max_n = 6;
  std::size_t count = 1000;
  std::size_t samples = 64;
  std::optional<double> lambda;
  std::optional<double> guard;
  bool json = false;
  bool csv = false;
  bool timing = false;
};

int cmd_stretch(const Flags& f, unsigned threads, std::ostream& out) {
  const std::vector<Point> pts = io::read_points(f.input);
  if (pts.size() < 3) throw DomainError("need at least 3 points, got " + std::to_string(pts.size()));
  const Triangulation t = triangulate(pts);
  out << to_json(stretch_factor(t, {.threads = threads})) << '\n';
  return kExitOk;
}

int cmd_random(const Flags& f, unsigned threads, std::ostream& out) {
  const std::vector<ExperimentRecord> records = random_trials(f.n, f.trials, f.seed, threads);
  std::size_t best = 0;
  bool in_range = true;
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (records[k].stretch > records[best].stretch) best = k;
    in_range = in_range && records[k].stretch >= 1.0 && records[k].stretch < kDefaultConstants.rho;
  }

  if (f.json) {
    auto row = [&](const ExperimentRecord& r) {
      nlohmann::ordered_json j{{"seed", r.seed}, {"n", r.n},   {"trial", r.trial},
                               {"stretch", r.stretch}, {"witness", {r.witness[0], r.witness[1]}}};
      if (f.timing) j["runtime_ms"] = r.runtime_ms;
      return j;
    };
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) doc["records"].push_back(row(r));
    doc["max"] = row(records[best]);
    out << doc.dump() << '\n';
  } else {
    out << "kind,seed,n,trial,stretch,witness_i,witness_j" << (f.timing ? ",runtime_ms" : "") << '\n';
    auto row = [&](const char* kind, const ExperimentRecord& r) {
      out << kind << ',' << r.seed << ',' << r.n << ',' << r.trial << ',' << fixed17(r.stretch) << ','
          << r.witness[0] << ',' << r.witness[1];
      if (f.timing) out << ',' << fixed17(r.runtime_ms);
      out << '\n';
    };
    for (const auto& r : records) row("trial", r);
    row("max", records[best]);
  }
  return in_range ? kExitOk : kExitFailure;
}

int cmd_certify(const Flags& f, std::ostream& out) {
  verifier::VerifierConfig config;
  if (f.lambda) config.lambda = *f.lambda;
  if (f.guard) config.guard = *f.guard;
  const verifier::CertificateReport report = verifier::certify(config);
  out << verifier::to_json(report) << '\n';
  return report.pass ? kExitOk : kExitFailure;
}

int cmd_chain_suite(const Flags& f, unsigned threads, std::ostream& out) {
  ChainSuiteOptions options;
  options.count = f.count;
  options.max_n = f.max_n;
  options.seed = f.suite_seed;
  options.terminal_samples = f.samples;
  options.threads = threads;

  if (f.input.empty()) {
    const ChainSuiteSummary summary = run_chain_suite(options);
    out << to_json(summary) << '\n';
    return summary.ok() ? kExitOk : kExitFailure;
  }

  const io::ChainFile file = io::read_chain(f.input);
  const Chain chain = make_chain(file.circles);
  std::optional<ChainEvaluation> fixture;
  std::vector<TerminalPair> terminals;
  if (file.u && file.v) {
    const TerminalPair t = make_terminals(chain, *file.u, *file.v);
    fixture = evaluate(chain, t);
    terminals.push_back(t);
  }
  std::mt19937_64 rng(derive_seed(f.suite_seed, 0));
  for (std::size_t k = 0; k < f.samples; ++k) terminals.push_back(random_terminals(chain, rng));
  ChainSuiteSummary summary;
  merge(summary, check_chain(chain, terminals, options), 0);
  out << to_json(summary, fixture) << '\n';
  return summary.ok() ? kExitOk : kExitFailure;
}

int cmd_lowerbound(const Flags& f, unsigned threads, std::ostream& out) {
  if (f.lower_n < 8) throw DomainError("lowerbound needs --n >= 8");
  const Triangulation t = triangulate(lowerbound_points(f.lower_n));
  const StretchReport report = stretch_factor(t, {.threads = threads});
  out << to_json(report) << '\n';
  return report.stretch < kDefaultConstants.rho ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delaunay and chain-of-circles stretch-factor toolkit"};
  app.name("dstretch");
  app.require_subcommand(1);
  app.footer("Environment: STRETCH_THREADS sets the worker count (0 = all cores; default all cores).\n"
             "Exit codes: 0 success, 1 certification or property failure, 2 usage or input error.");
  Flags f;

  auto* stretch = app.add_subcommand("stretch", "Stretch factor of the Delaunay triangulation of a point file (JSON)");
  stretch->add_option("--input", f.input, "Point file, one 'x,y' per line, '#' comments")->required();
  stretch->add_flag("--json", f.json, "JSON output (the only format)");

  auto* random = app.add_subcommand("random", "Stretch factors of random point sets in the unit square");
  random->add_option("--n", f.n, "Points per trial (>= 3)")->capture_default_str();
  random->add_option("--trials", f.trials, "Number of trials (>= 1)")->capture_default_str();
  random->add_option("--seed", f.seed, "Base seed")->capture_default_str();
  auto* rjson = random->add_flag("--json", f.json, "JSON output");
  auto* rcsv = random->add_flag("--csv", f.csv, "CSV output (default)");
  rjson->excludes(rcsv);
  random->add_flag("--timing", f.timing, "Add per-trial wall time (makes output non-reproducible)");
  random->footer(kRandomFooter);

  auto* certify = app.add_subcommand("certify", "Certify the four auxiliary inequalities (JSON); exit 0 iff all pass");
  certify->add_option("--lambda", f.lambda, "Target weight lambda (default 1.8)");
  certify->add_option("--guard", f.guard, "Certification threshold for the apex (default -1e-6)");
  certify->add_flag("--json", f.json, "JSON output (the only format)");

  auto* suite = app.add_subcommand("chain-suite", "Property checks on random chains (JSON summary)");
  suite->add_option("--count", f.count, "Number of random chains (>= 1)")->capture_default_str();
  suite->add_option("--max-n", f.max_n, "Largest chain size (>= 2); sizes are uniform on 1..max-n")->capture_default_str();
  suite->add_option("--seed", f.suite_seed, "Base seed")->capture_default_str();
  suite->add_option("--samples", f.samples, "Terminal pairs per chain")->capture_default_str();
  suite->add_option("--input", f.input,
                    "Check this chain file ('cx,cy,r' lines, optional 'u:x,y v:x,y') instead of random chains");
  suite->add_flag("--json", f.json, "JSON output (the only format)");

  auto* lower = app.add_subcommand("lowerbound", "Stretch factor of a perturbed near-circular point set (JSON)");
  lower->add_option("--n", f.lower_n, "Number of points (>= 8)")->capture_default_str();
  lower->add_flag("--json", f.json, "JSON output (the only format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const unsigned threads = threads_from_env(0);
    if (stretch->parsed()) return cmd_stretch(f, threads, out);
    if (random->parsed()) return cmd_random(f, threads, out);
    if (certify->parsed()) return cmd_certify(f, out);
    if (suite->parsed()) return cmd_chain_suite(f, threads, out);
    return cmd_lowerbound(f, threads, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegeneracyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace dstretch
