#include "qgeom/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "qgeom/evolution.hpp"
#include "qgeom/optimize.hpp"
#include "qgeom/problem.hpp"
#include "qgeom/projective.hpp"
#include "qgeom/random.hpp"
#include "qgeom/realify.hpp"
#include "qgeom/serialize.hpp"
#include "qgeom/uncertainty.hpp"

namespace qgeom::cli {
namespace {

struct GlobalFlags {
  std::string input;
  std::optional<double> tol;
  std::optional<double> metric_scale;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
      return kIoOrParse;
    case ErrorKind::DimensionMismatch:
      return kDimension;
    default:
      return kValidation;
  }
}

ProblemFile load(const GlobalFlags& flags) {
  if (flags.input.empty()) {
    throw Error(ErrorKind::InvalidArgument, "--input is required");
  }
  ProblemFile p = load_problem(flags.input, flags.tol);
  if (flags.metric_scale) p.options.metric_scale = *flags.metric_scale;
  if (flags.seed) p.options.seed = *flags.seed;
  return p;
}

int cmd_report(const GlobalFlags& flags, const std::vector<std::string>& pair,
               std::ostream& out) {
  const ProblemFile p = load(flags);
  const UncertaintyReport r = relations_report(
      p.observable(pair[0]), p.observable(pair[1]), p.require_state());
  if (flags.format == "csv") {
    write_report_csv(r, out);
  } else {
    out << dump_json(to_json(r)) << '\n';
  }
  return kOk;
}

int cmd_evolve(const GlobalFlags& flags, const std::string& generator,
               double t_max, int steps, const std::string& out_path,
               std::ostream& out) {
  const ProblemFile p = load(flags);
  const FlowTrace trace =
      trace_flow(p.observable(generator), p.require_state(), t_max, steps);
  if (out_path.empty()) {
    write_flow_csv(trace, out);
    return kOk;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(ErrorKind::Io, "cannot write " + out_path);
  write_flow_csv(trace, file);
  return kOk;
}

int cmd_distances(const GlobalFlags& flags,
                  const std::vector<std::string>& pair, std::ostream& out) {
  const ProblemFile p = load(flags);
  const TriangleReport r =
      triangle_report(p.observable(pair[0]), p.observable(pair[1]),
                      p.require_state(), p.options.metric_scale);
  out << dump_json(to_json(r)) << '\n';
  return kOk;
}

int cmd_minimize(const GlobalFlags& flags,
                 const std::vector<std::string>& pair, int restarts,
                 int max_iter, double grad_tol, std::ostream& out) {
  if (restarts < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "--restarts must be at least 1, got " +
                    std::to_string(restarts));
  }
  const ProblemFile p = load(flags);
  MultiStartOptions opts;
  opts.restarts = restarts;
  opts.seed = p.options.seed;
  opts.descent.max_iter = max_iter;
  opts.descent.grad_tol = grad_tol;
  opts.descent.certificate_tol = p.options.tol;
  const OptimizeResult r = minimize_multistart(
      p.observable(pair[0]), p.observable(pair[1]), p.state, opts);
  out << dump_json(to_json(r)) << '\n';
  return kOk;
}

// Checks the relations on one (A, B, φ) triple; returns the number of
// identities that held and bumps `failures` for the rest.
int check_triple(const Observable& a, const Observable& b, const State& phi,
                 int& failures) {
  const UncertaintyReport r = relations_report(a, b, phi);
  const double s1 = 1e-10 * r.scale;
  const double s2 = 1e-10 * r.scale * r.scale;

  const CVector x = tangent_field(a, phi, true).vec;
  const CVector y = tangent_field(b, phi, true).vec;
  const double cs = x.squaredNorm() * y.squaredNorm() - std::norm(inner(x, y));

  const bool checks[] = {
      std::abs(r.identity_residual) <= s2,
      r.robertson_slack >= -s1,
      r.area_bound_slack >= -s1,
      r.delta_a * r.delta_b - r.area >= -s1,
      r.schrodinger_slack >= -s2,
      std::abs(r.schrodinger_slack - cs) <= s2,
      std::abs(r.commutator_half - r.commutator_half_geometric) <= s1,
      std::abs(r.anticommutator_half - std::abs(r.metric_term)) <= s1,
  };
  int ok = 0;
  for (bool c : checks) c ? ++ok : ++failures;
  return ok;
}

int cmd_selftest(const GlobalFlags& flags, int n_random, std::ostream& out) {
  if (n_random < 0) {
    throw Error(ErrorKind::InvalidArgument, "--n-random must be >= 0");
  }
  int verified = 0;
  int failures = 0;
  std::uint64_t seed = flags.seed.value_or(42);
  int fixtures = 0;
  if (!flags.input.empty()) {
    const ProblemFile p = load(flags);
    seed = flags.seed.value_or(p.options.seed);
    if (p.state) {
      for (const auto& [na, a] : p.observables) {
        for (const auto& [nb, b] : p.observables) {
          verified += check_triple(a, b, *p.state, failures);
          ++fixtures;
        }
      }
    }
  }
  constexpr int kDims[] = {2, 3, 4, 8, 16};
  Rng rng(seed);
  for (int i = 0; i < n_random; ++i) {
    const int n = kDims[i % 5];
    const Observable a = random_hermitian(n, rng);
    const Observable b = random_hermitian(n, rng);
    const State phi = haar_state(n, rng);
    verified += check_triple(a, b, phi, failures);
  }
  out << "selftest: " << n_random << " random instances, " << fixtures
      << " fixture pairs, " << verified << " identities verified, "
      << failures << " failures\n";
  return failures == 0 ? kOk : kValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Geometric uncertainty relations toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--input", flags.input, "Problem file (JSON)");
  app.add_option("--tol", flags.tol, "Validation tolerance");
  app.add_option("--metric-scale", flags.metric_scale,
                 "Multiplier for Fubini-Study distances");
  app.add_option("--seed", flags.seed, "Base random seed");
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> pair;
  std::string generator;
  std::string out_path;
  double t_max = 1.0;
  int steps = 64;
  int restarts = 8;
  int max_iter = 2000;
  double grad_tol = 1e-8;
  int n_random = 1000;

  auto* report = app.add_subcommand("report", "Uncertainty relations report");
  report->add_option("--pair", pair, "Observables A B")
      ->expected(2)
      ->required();

  auto* evolve = app.add_subcommand("evolve", "Trace the flow e^{-iAt}");
  evolve->add_option("--generator", generator, "Generator name")->required();
  evolve->add_option("--t-max", t_max, "Final time");
  evolve->add_option("--steps", steps, "Number of samples");
  evolve->add_option("--out", out_path, "CSV output path (default stdout)");

  auto* distances =
      app.add_subcommand("distances", "Distances to eigenstate sets");
  distances->add_option("--pair", pair, "Observables A B")
      ->expected(2)
      ->required();

  auto* minimize = app.add_subcommand("minimize", "Minimize (dA dB)^2");
  minimize->add_option("--pair", pair, "Observables A B")
      ->expected(2)
      ->required();
  minimize->add_option("--restarts", restarts, "Number of restarts");
  minimize->add_option("--max-iter", max_iter, "Iterations per restart");
  minimize->add_option("--grad-tol", grad_tol, "Gradient stopping tolerance");

  auto* selftest = app.add_subcommand("selftest", "Randomized invariant suite");
  selftest->add_option("--n-random", n_random, "Random instances");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (*report) return cmd_report(flags, pair, out);
    if (*evolve)
      return cmd_evolve(flags, generator, t_max, steps, out_path, out);
    if (*distances) return cmd_distances(flags, pair, out);
    if (*minimize)
      return cmd_minimize(flags, pair, restarts, max_iter, grad_tol, out);
    if (*selftest) return cmd_selftest(flags, n_random, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kValidation;
}

}  // namespace qgeom::cli
