// lpfourier: command-line front end.
//
// Exit codes: 0 success, 1 bound or assertion failure, 2 usage error,
// 3 quadrature budget failure, 4 conjecture counterexample candidate.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lpfourier/convex_probe.hpp"
#include "lpfourier/decay.hpp"
#include "lpfourier/error.hpp"
#include "lpfourier/fourier.hpp"
#include "lpfourier/parallel.hpp"
#include "lpfourier/report.hpp"
#include "lpfourier/verify.hpp"

namespace {

using namespace lpfourier;

enum ExitCode : int {
  kOk = 0,
  kBoundFailure = 1,
  kUsage = 2,
  kBudget = 3,
  kCounterexample = 4,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  QuadConfig quad;
  unsigned workers = default_workers();
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--abs-tol", o.quad.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
  cmd->add_option("--rel-tol", o.quad.rel_tol, "Relative quadrature tolerance")->capture_default_str();
  cmd->add_option("--max-panels", o.quad.max_panels, "Panel budget per integral")->capture_default_str();
  cmd->add_option("--panels-per-wavelength", o.quad.panels_per_wavelength,
                  "Initial panel density")
      ->capture_default_str();
  cmd->add_option("--workers", o.workers, "Worker threads (default: LPFOURIER_WORKERS or core count)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp from output headers");
}

void add_quad_config(nlohmann::json& config, const QuadConfig& q) {
  config["abs_tol"] = q.abs_tol;
  config["rel_tol"] = q.rel_tol;
  config["max_panels"] = q.max_panels;
  config["endpoint_inset"] = q.endpoint_inset;
  config["panels_per_wavelength"] = q.panels_per_wavelength;
}

// "-" is stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// The summary defaults to stdout, or to stderr when the CSV already occupies stdout.
void emit_summary(const nlohmann::json& j, const std::string& summary_path,
                  const std::string& csv_path) {
  if (summary_path.empty()) {
    (csv_path == "-" ? std::cerr : std::cout) << j.dump(2) << '\n';
    return;
  }
  Sink sink(summary_path);
  sink.stream() << j.dump(2) << '\n';
}

PExponent parse_p(double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw UsageError("--p must lie in [1, 2]");
  return PExponent(p);
}

// ---------------------------------------------------------------------------

struct TransformArgs {
  double p = 2.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::string method = "slice";
};

int run_transform(const TransformArgs& a, const CommonOptions& o) {
  const PExponent p = parse_p(a.p);
  const Frequency w = Frequency::cartesian(a.alpha, a.beta);
  TransformResult res;
  if (a.method == "slice") {
    res = chi_hat_lp(p, w, o.quad);
  } else if (a.method == "polar") {
    res = chi_hat_lp_polar(p, w, o.quad);
  } else if (a.method == "closed") {
    if (!p.is_one()) throw UsageError("--method closed requires --p 1");
    res = chi_hat_lp(p, w, o.quad, true);
  } else {
    throw UsageError("--method must be slice, polar or closed");
  }

  RunHeader h;
  h.command = "transform";
  h.config = {{"p", a.p}, {"alpha", a.alpha}, {"beta", a.beta}, {"method", a.method}};
  add_quad_config(h.config, o.quad);
  h.with_timestamp = !o.no_timestamp;
  nlohmann::json j = summary_base(h);
  j["value"] = res.value;
  j["err_estimate"] = res.err_estimate;
  j["method"] = std::string(to_string(res.method));
  j["r"] = w.r;
  j["scaled_value"] = std::pow(w.r, 1.5) * std::abs(res.value);
  std::cout << j.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

struct EnvelopeArgs {
  double p = 1.5;
  double r_min = 5.0;
  double r_max = 2000.0;
  int per_decade = kDefaultPerDecade;
  int theta_count = kDefaultThetaCount;
  std::string output = "-";
  std::string summary;
};

int run_envelope(const EnvelopeArgs& a, const CommonOptions& o) {
  const PExponent p = parse_p(a.p);
  if (!(a.r_max > a.r_min)) throw UsageError("empty r-range: --r-max must exceed --r-min");
  if (a.r_min < 5.0) throw UsageError("--r-min must be at least 5");
  if (a.per_decade < 1 || a.theta_count < 2) throw UsageError("grid densities too small");

  const EnvelopeScan scan = envelope_scan(p, log_grid(a.r_min, a.r_max, a.per_decade),
                                          default_theta_grid(p, a.theta_count), o.quad, o.workers);
  const RunHeader h =
      envelope_header(a.p, a.r_min, a.r_max, a.per_decade, a.theta_count, o.quad, !o.no_timestamp);
  {
    Sink sink(a.output);
    write_envelope_csv(sink.stream(), h, scan);
  }
  std::optional<BoundCheck> check;
  if (!p.is_one()) check = upper_bound_check(p, scan.c_est);
  emit_summary(envelope_summary(h, scan, check ? &*check : nullptr), a.summary, a.output);
  return check && !check->pass ? kBoundFailure : kOk;
}

// ---------------------------------------------------------------------------

struct SequenceArgs {
  double p = 1.5;
  int n_min = 25;
  int n_max = 200;
  std::string output = "-";
};

int run_sequence(const SequenceArgs& a, const CommonOptions& o) {
  const PExponent p = parse_p(a.p);
  if (p.is_special()) throw UsageError("sequence requires 1 < p < 2");
  if (a.n_min < 1 || a.n_max < a.n_min) throw UsageError("requires 1 <= --n-min <= --n-max");
  const SequenceSpec spec = stationary_sequence(p, a.n_min, a.n_max);
  const std::vector<SequencePoint> pts = sequence_values(p, spec, o.quad, o.workers);
  RunHeader h;
  h.command = "sequence";
  h.config = {{"p", a.p}, {"n_min", a.n_min}, {"n_max", a.n_max}};
  add_quad_config(h.config, o.quad);
  h.with_timestamp = !o.no_timestamp;
  Sink sink(a.output);
  write_sequence_csv(sink.stream(), h, pts);
  return kOk;
}

// ---------------------------------------------------------------------------

struct FitArgs {
  std::vector<double> p_list = {1.05, 1.1, 1.2, 1.3, 1.4};
  int n_ref = 200;
  std::string summary = "-";
};

int run_fit(const FitArgs& a, const CommonOptions& o) {
  if (a.p_list.size() < 4) throw UsageError("--p-list needs at least 4 values");
  for (double p : a.p_list) {
    if (!(p > 1.0 && p <= 1.5)) throw UsageError("--p-list values must lie in (1, 1.5]");
  }
  if (a.n_ref < 1) throw UsageError("--n-ref must be positive");
  const FitResult fit = blowup_fit(a.p_list, a.n_ref, o.quad, o.workers);
  const FitResult ref = asymptote_fit(a.p_list);
  RunHeader h;
  h.command = "fit";
  h.config = {{"p_list", a.p_list}, {"n_ref", a.n_ref}};
  add_quad_config(h.config, o.quad);
  h.with_timestamp = !o.no_timestamp;
  Sink sink(a.summary);
  sink.stream() << fit_summary(h, fit, ref).dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

struct ConjectureArgs {
  std::string body_file;
  double r_min = 5.0;
  double r_max = 2000.0;
  int per_decade = kDefaultPerDecade;
  int theta_count = kDefaultThetaCount;
  std::string summary = "-";
};

int run_conjecture(const ConjectureArgs& a, const CommonOptions& o) {
  std::ifstream in(a.body_file);
  if (!in) throw UsageError("cannot read " + a.body_file);
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(a.body_file + ": " + e.what());
  }
  if (!(a.r_max > a.r_min)) throw UsageError("empty r-range: --r-max must exceed --r-min");
  if (a.r_min < 5.0) throw UsageError("--r-min must be at least 5");
  if (a.per_decade < 1 || a.theta_count < 2) throw UsageError("grid densities too small");

  const ConvexBody body = body_from_json(spec);
  const CurvatureMin cmin = body_curvature_min(body);
  const std::vector<double> thetas = conjecture_theta_grid(body, cmin, a.theta_count);
  const ConjectureReport rep = conjecture_scan(body, log_grid(a.r_min, a.r_max, a.per_decade),
                                               thetas, o.quad, o.workers);
  RunHeader h;
  h.command = "conjecture";
  h.config = {{"body", spec},         {"r_min", a.r_min},
              {"r_max", a.r_max},     {"per_decade", a.per_decade},
              {"theta_count", a.theta_count}};
  add_quad_config(h.config, o.quad);
  h.with_timestamp = !o.no_timestamp;
  Sink sink(a.summary);
  sink.stream() << conjecture_summary(h, rep).dump(2) << '\n';
  return rep.counterexample_candidate ? kCounterexample : kOk;
}

// ---------------------------------------------------------------------------

int run_verify(const std::string& suite, bool quiet, const CommonOptions& o) {
  if (!acceptance::is_suite(suite)) {
    std::ostringstream names;
    for (const std::string& n : acceptance::suite_names()) names << ' ' << n;
    throw UsageError("unknown suite '" + suite + "'; available:" + names.str());
  }
  acceptance::SuiteOptions so;
  so.workers = o.workers;
  so.log = quiet ? nullptr : &std::cerr;
  const auto results = acceptance::run_suite(suite, so);
  acceptance::print_results(std::cout, results);
  for (const auto& r : results) {
    if (!r.pass) return kBoundFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier transforms of l^p unit-ball indicators and their decay"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  CommonOptions common;

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Evaluate chi_hat at one frequency");
  transform->add_option("--p", ta.p, "Exponent in [1, 2]")->required();
  transform->add_option("--alpha", ta.alpha, "First frequency coordinate")->required();
  transform->add_option("--beta", ta.beta, "Second frequency coordinate")->required();
  transform->add_option("--method", ta.method, "slice, polar or closed (p = 1 only)")
      ->capture_default_str();
  add_common(transform, common);

  EnvelopeArgs ea;
  auto* envelope = app.add_subcommand("envelope", "Scan r^{3/2}|chi_hat| and check the upper bound");
  envelope->add_option("--p", ea.p, "Exponent in [1, 2]")->required();
  envelope->add_option("--r-min", ea.r_min)->capture_default_str();
  envelope->add_option("--r-max", ea.r_max)->capture_default_str();
  envelope->add_option("--per-decade", ea.per_decade, "Radii per decade")->capture_default_str();
  envelope->add_option("--theta-count", ea.theta_count, "Uniform angles on [pi/4, pi/2)")
      ->capture_default_str();
  envelope->add_option("--output", ea.output, "CSV destination ('-' for stdout)")
      ->capture_default_str();
  envelope->add_option("--summary", ea.summary,
                       "JSON summary destination (default: stdout, or stderr if the CSV is on stdout)");
  add_common(envelope, common);

  SequenceArgs sa;
  auto* sequence = app.add_subcommand("sequence", "Scaled values along the witness sequence");
  sequence->add_option("--p", sa.p, "Exponent in (1, 2)")->required();
  sequence->add_option("--n-min", sa.n_min)->capture_default_str();
  sequence->add_option("--n-max", sa.n_max)->capture_default_str();
  sequence->add_option("--output", sa.output, "CSV destination ('-' for stdout)")
      ->capture_default_str();
  add_common(sequence, common);

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "Fit the blow-up exponent as p -> 1");
  fit->add_option("--p-list", fa.p_list, "Comma-separated exponents in (1, 1.5]")
      ->delimiter(',')
      ->capture_default_str();
  fit->add_option("--n-ref", fa.n_ref, "Sequence index used for each p")->capture_default_str();
  fit->add_option("--summary", fa.summary, "JSON destination ('-' for stdout)")->capture_default_str();
  add_common(fit, common);

  ConjectureArgs ca;
  auto* conjecture = app.add_subcommand("conjecture", "Probe the curvature bound on a convex body");
  conjecture->add_option("--body", ca.body_file, "Body definition JSON")->required();
  conjecture->add_option("--r-min", ca.r_min)->capture_default_str();
  conjecture->add_option("--r-max", ca.r_max)->capture_default_str();
  conjecture->add_option("--per-decade", ca.per_decade)->capture_default_str();
  conjecture->add_option("--theta-count", ca.theta_count)->capture_default_str();
  conjecture->add_option("--summary", ca.summary, "JSON destination ('-' for stdout)")
      ->capture_default_str();
  add_common(conjecture, common);

  std::string suite = "all";
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", suite, "Criterion name, 'quick' or 'all'")->capture_default_str();
  verify->add_flag("--quiet", quiet, "Only print the result table");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*transform) return run_transform(ta, common);
    if (*envelope) return run_envelope(ea, common);
    if (*sequence) return run_sequence(sa, common);
    if (*fit) return run_fit(fa, common);
    if (*conjecture) return run_conjecture(ca, common);
    if (*verify) return run_verify(suite, quiet, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const QuadratureBudgetError& e) {
    std::cerr << "quadrature failure: " << e.what() << '\n';
    return kBudget;
  } catch (const NonFiniteIntegrandError& e) {
    std::cerr << "quadrature failure: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBoundFailure;
  }
  return kUsage;
}
