#include "lpfourier/convex_probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "lpfourier/decay.hpp"
#include "lpfourier/error.hpp"
#include "lpfourier/parallel.hpp"

namespace lpfourier {

namespace {

constexpr double kPi = std::numbers::pi;

GraphFunction negate(const GraphFunction& g) {
  return {[f = g.f](double x) { return -f(x); }, [f = g.d1](double x) { return -f(x); },
          [f = g.d2](double x) { return -f(x); }};
}

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

ConvexBody ellipse_no_transpose(double a, double b) {
  ConvexBody body;
  std::ostringstream label;
  label << "ellipse(" << a << "," << b << ")";
  body.label = label.str();
  body.x0 = -a;
  body.x1 = a;
  body.upper = {
      [a, b](double x) {
        const double t = x / a;
        return b * std::sqrt(std::max(0.0, 1.0 - t * t));
      },
      [a, b](double x) {
        const double t = x / a;
        return -b * t / (a * std::sqrt(1.0 - t * t));
      },
      [a, b](double x) {
        const double t = x / a;
        const double s = 1.0 - t * t;
        return -b / (a * a * s * std::sqrt(s));
      }};
  body.lower = negate(body.upper);
  body.centrally_symmetric = true;
  body.axis_symmetric = true;
  return body;
}

ConvexBody superellipse_no_transpose(double a, double b, PExponent p) {
  ConvexBody body;
  std::ostringstream label;
  label << "superellipse(" << a << "," << b << ",p=" << p.value() << ")";
  body.label = label.str();
  body.x0 = -a;
  body.x1 = a;
  body.upper = {
      [a, b, p](double x) { return b * phi(p, std::min(1.0, std::abs(x) / a)); },
      [a, b, p](double x) {
        const double t = std::abs(x) / a;
        if (t == 0.0) return 0.0;
        if (t >= 1.0) return x > 0 ? -std::numeric_limits<double>::infinity()
                                   : std::numeric_limits<double>::infinity();
        return std::copysign(1.0, x) * (b / a) * phi_d1(p, t);
      },
      [a, b, p](double x) {
        const double t = std::abs(x) / a;
        if (t == 0.0) {
          if (p.is_two()) return -b / (a * a);
          if (p.is_one()) return 0.0;
          return -std::numeric_limits<double>::infinity();
        }
        if (t >= 1.0) return -std::numeric_limits<double>::infinity();
        return (b / (a * a)) * phi_d2(p, t);
      }};
  body.lower = negate(body.upper);
  body.centrally_symmetric = true;
  body.axis_symmetric = true;
  return body;
}

}  // namespace

void ConvexBody::validate(int samples) const {
  if (!(std::isfinite(x0) && std::isfinite(x1) && x0 < x1)) {
    throw DomainError(label + ": requires a finite interval x0 < x1");
  }
  if (!upper.f || !upper.d1 || !upper.d2 || !lower.f || !lower.d1 || !lower.d2) {
    throw DomainError(label + ": graph functions are incomplete");
  }
  const double scale = std::max({1.0, std::abs(x0), std::abs(x1)});
  const double gap0 = upper.f(x0) - lower.f(x0);
  const double gap1 = upper.f(x1) - lower.f(x1);
  if (!(std::abs(gap0) <= 1e-9 * scale && std::abs(gap1) <= 1e-9 * scale)) {
    throw DomainError(label + ": upper and lower graphs must meet at both endpoints");
  }
  for (int i = 0; i < samples; ++i) {
    const double x = x0 + (x1 - x0) * (i + 0.5) / samples;
    const double u = upper.f(x);
    const double l = lower.f(x);
    if (!(std::isfinite(u) && std::isfinite(l))) {
      throw DomainError(label + ": graph is not finite at x = " + std::to_string(x));
    }
    if (l > u) {
      throw DomainError(label + ": lower graph exceeds upper graph at x = " + std::to_string(x));
    }
    const double tol = 1e-12 * scale;
    if (upper.d2(x) > tol) {
      throw DomainError(label + ": upper graph is not concave at x = " + std::to_string(x));
    }
    if (lower.d2(x) < -tol) {
      throw DomainError(label + ": lower graph is not convex at x = " + std::to_string(x));
    }
  }
}

ConvexBody make_ellipse(double a, double b) {
  if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("make_ellipse: semi-axes must be positive");
  }
  ConvexBody body = ellipse_no_transpose(a, b);
  body.transposed = std::make_shared<const ConvexBody>(ellipse_no_transpose(b, a));
  return body;
}

ConvexBody make_disk() {
  ConvexBody body = make_ellipse(1.0, 1.0);
  body.label = "disk";
  return body;
}

ConvexBody make_superellipse(double a, double b, double p) {
  if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("make_superellipse: semi-axes must be positive");
  }
  const PExponent pe(p);
  ConvexBody body = superellipse_no_transpose(a, b, pe);
  body.transposed = std::make_shared<const ConvexBody>(superellipse_no_transpose(b, a, pe));
  return body;
}

ConvexBody make_lp_body(PExponent p) {
  ConvexBody body = make_superellipse(1.0, 1.0, p.value());
  std::ostringstream label;
  label << "lp(p=" << p.value() << ")";
  body.label = label.str();
  return body;
}

ConvexBody make_poly_body(double x0, double x1, std::vector<double> upper_coeffs,
                          std::vector<double> lower_coeffs, std::string label) {
  if (upper_coeffs.empty() || lower_coeffs.empty()) {
    throw DomainError("make_poly_body: coefficient lists must be non-empty");
  }
  auto graph = [](std::vector<double> c) {
    auto d = derivative(c);
    auto dd = derivative(d);
    return GraphFunction{[c](double x) { return horner(c, x); },
                         [d](double x) { return horner(d, x); },
                         [dd](double x) { return horner(dd, x); }};
  };
  ConvexBody body;
  body.label = std::move(label);
  body.x0 = x0;
  body.x1 = x1;
  body.upper = graph(std::move(upper_coeffs));
  body.lower = graph(std::move(lower_coeffs));
  return body;
}

ConvexBody body_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const nlohmann::json& params = j.at("params");
    ConvexBody body;
    if (kind == "lp") {
      body = make_lp_body(PExponent(params.at("p").get<double>()));
    } else if (kind == "ellipse") {
      body = make_ellipse(params.at("a").get<double>(), params.at("b").get<double>());
    } else if (kind == "superellipse") {
      body = make_superellipse(params.at("a").get<double>(), params.at("b").get<double>(),
                               params.at("p").get<double>());
    } else if (kind == "custom-poly-coeffs") {
      body = make_poly_body(params.at("x0").get<double>(), params.at("x1").get<double>(),
                            params.at("upper").get<std::vector<double>>(),
                            params.at("lower").get<std::vector<double>>());
    } else {
      throw DomainError("body definition: unknown kind '" + kind + "'");
    }
    if (j.contains("label")) body.label = j.at("label").get<std::string>();
    body.validate();
    return body;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("body definition: ") + e.what());
  }
}

namespace {

struct Arc {
  const GraphFunction* g;
  double x0;
  double x1;
  bool is_upper;
  bool is_transposed;
};

double arc_curvature(const GraphFunction& g, double x) {
  const double d1 = g.d1(x);
  const double d2 = g.d2(x);
  if (std::isinf(d2) && std::isfinite(d1)) return std::numeric_limits<double>::infinity();
  const double h = std::hypot(1.0, d1);
  const double k = std::abs(d2) / h / h / h;
  if (std::isnan(k)) {
    throw DomainError("body_curvature_min: curvature is not finite at x = " + std::to_string(x));
  }
  return k;
}

struct ArcMin {
  double kappa;
  double x;
};

ArcMin scan_arc(const Arc& arc, double lo, double hi, int n) {
  ArcMin best{std::numeric_limits<double>::infinity(), 0.5 * (lo + hi)};
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * (i + 0.5) / n;
    const double k = arc_curvature(*arc.g, x);
    if (k < best.kappa) best = {k, x};
  }
  return best;
}

// Arc ends are candidates only where the curvature is finite there (not at a
// vertical tangent and not outside the graph's derivative domain).
ArcMin endpoint_min(const Arc& arc) {
  ArcMin best{std::numeric_limits<double>::infinity(), arc.x0};
  for (double x : {arc.x0, arc.x1}) {
    double k = std::numeric_limits<double>::infinity();
    try {
      const double d1 = arc.g->d1(x);
      const double d2 = arc.g->d2(x);
      if (std::isfinite(d1) && std::isfinite(d2)) k = arc_curvature(*arc.g, x);
    } catch (const std::exception&) {
    }
    if (k < best.kappa) best = {k, x};
  }
  return best;
}

}  // namespace

CurvatureMin body_curvature_min(const ConvexBody& body, int grid_n) {
  if (grid_n < 1000) throw DomainError("body_curvature_min: grid_n must be at least 1000");
  std::vector<Arc> arcs = {{&body.upper, body.x0, body.x1, true, false},
                           {&body.lower, body.x0, body.x1, false, false}};
  if (body.transposed) {
    arcs.push_back({&body.transposed->upper, body.transposed->x0, body.transposed->x1, true, true});
    arcs.push_back({&body.transposed->lower, body.transposed->x0, body.transposed->x1, false, true});
  }

  double best_k = std::numeric_limits<double>::infinity();
  std::size_t best_arc = 0;
  double best_x = 0.0;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const ArcMin m = scan_arc(arcs[a], arcs[a].x0, arcs[a].x1, grid_n);
    if (m.kappa < best_k) {
      best_k = m.kappa;
      best_arc = a;
      best_x = m.x;
    }
  }
  const Arc& scanned = arcs[best_arc];
  const double cell = (scanned.x1 - scanned.x0) / grid_n;
  const double lo = std::max(scanned.x0, best_x - cell);
  const double hi = std::min(scanned.x1, best_x + cell);
  const ArcMin refined = scan_arc(scanned, lo, hi, grid_n);
  if (refined.kappa < best_k) {
    best_k = refined.kappa;
    best_x = refined.x;
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const ArcMin m = endpoint_min(arcs[a]);
    if (m.kappa < best_k) {
      best_k = m.kappa;
      best_arc = a;
      best_x = m.x;
    }
  }

  const Arc& arc = arcs[best_arc];
  const double g = arc.g->f(best_x);
  const double gp = arc.g->d1(best_x);
  // Outward normal in the arc's own coordinates.
  double nx = arc.is_upper ? -gp : gp;
  double ny = arc.is_upper ? 1.0 : -1.0;
  CurvatureMin out;
  out.nu = best_k;
  if (arc.is_transposed) {
    std::swap(nx, ny);
    out.x = g;
    out.y = best_x;
  } else {
    out.x = best_x;
    out.y = g;
  }
  double angle = std::atan2(ny, nx);
  if (angle < 0.0) angle += 2.0 * kPi;
  out.normal_angle = angle;
  return out;
}

namespace {

double total_variation(const std::function<double(double)>& f, double a, double b) {
  constexpr int kSamples = 64;
  double tv = 0.0;
  double prev = f(a);
  for (int i = 1; i <= kSamples; ++i) {
    const double cur = f(a + (b - a) * i / kSamples);
    tv += std::abs(cur - prev);
    prev = cur;
  }
  return tv;
}

double slice_hint(const ConvexBody& body, double alpha, double beta) {
  const double width = body.x1 - body.x0;
  const double tv = std::max(total_variation(body.upper.f, body.x0, body.x1),
                             total_variation(body.lower.f, body.x0, body.x1));
  return std::abs(alpha) + std::abs(beta) * tv / width;
}

// Slices along x: chi_hat = (1/pi) * integral S(x) exp(-i(alpha x + beta c(x))) dx with
// c the slice centre, h the half height and S = sin(beta h) / beta.
BodyTransform slice_x(const ConvexBody& body, double alpha, double beta, const QuadConfig& cfg,
                      bool with_imag) {
  const double hint = slice_hint(body, alpha, beta);
  auto slice = [&body, beta](double x, double& phase_shift) {
    const double u = body.upper.f(x);
    const double l = body.lower.f(x);
    const double h = 0.5 * (u - l);
    phase_shift = 0.5 * beta * (u + l);
    return beta == 0.0 ? h : std::sin(beta * h) / beta;
  };
  const QuadResult re = integrate_oscillatory(
      [&](double x) {
        double shift = 0.0;
        const double s = slice(x, shift);
        return s * std::cos(alpha * x + shift);
      },
      body.x0, body.x1, hint, cfg);
  BodyTransform out;
  out.real = re.value / kPi;
  out.err_estimate = re.err_estimate / kPi;
  if (with_imag) {
    const QuadResult im = integrate_oscillatory(
        [&](double x) {
          double shift = 0.0;
          const double s = slice(x, shift);
          return -s * std::sin(alpha * x + shift);
        },
        body.x0, body.x1, hint, cfg);
    out.imag = im.value / kPi;
    out.err_estimate += im.err_estimate / kPi;
  }
  out.method = TransformMethod::reduction_x;
  return out;
}

}  // namespace

BodyTransform chi_hat_body(const ConvexBody& body, const Frequency& omega, const QuadConfig& cfg,
                           bool full_complex) {
  const double alpha = omega.alpha;
  const double beta = omega.beta;
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("chi_hat_body: frequency must be finite");
  }
  const bool with_imag = full_complex || !body.centrally_symmetric;
  if (alpha == 0.0 && beta == 0.0) {
    const QuadResult area = integrate_oscillatory(
        [&body](double x) { return body.upper.f(x) - body.lower.f(x); }, body.x0, body.x1, 0.0,
        cfg);
    return {area.value / (2.0 * kPi), 0.0, area.err_estimate / (2.0 * kPi),
            TransformMethod::zero_frequency};
  }
  if (body.transposed) {
    const double hint_x = slice_hint(body, alpha, beta);
    const double hint_y = slice_hint(*body.transposed, beta, alpha);
    if (hint_y < hint_x) {
      BodyTransform t = slice_x(*body.transposed, beta, alpha, cfg, with_imag);
      t.method = TransformMethod::reduction_y;
      return t;
    }
  }
  return slice_x(body, alpha, beta, cfg, with_imag);
}

std::vector<double> conjecture_theta_grid(const ConvexBody& body, const CurvatureMin& cmin,
                                          int count) {
  if (count < 1) throw DomainError("conjecture_theta_grid: count must be positive");
  std::vector<double> out;
  if (body.axis_symmetric) {
    for (int k = 0; k <= count; ++k) out.push_back((kPi / 2.0) * k / count);
    out.push_back(std::atan2(std::abs(std::sin(cmin.normal_angle)),
                             std::abs(std::cos(cmin.normal_angle))));
  } else {
    for (int k = 0; k < 2 * count; ++k) out.push_back(kPi * k / (2 * count));
    out.push_back(std::fmod(cmin.normal_angle, kPi));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConjectureReport conjecture_scan(const ConvexBody& body, std::span<const double> r_grid,
                                 std::span<const double> theta_grid, const QuadConfig& cfg,
                                 unsigned workers) {
  cfg.validate();
  if (r_grid.empty() || theta_grid.empty()) throw DomainError("conjecture_scan: empty grid");
  const CurvatureMin cmin = body_curvature_min(body);
  if (!(cmin.nu > 0.0)) {
    throw DomainError("conjecture_scan: " + body.label +
                      " has zero minimum curvature; the bound is undefined");
  }

  ConjectureReport rep;
  rep.label = body.label;
  rep.nu = cmin.nu;
  rep.upper_bound = kUpperConstant / std::sqrt(cmin.nu);
  rep.lower_reference = kPublishedLowerConstant / std::sqrt(cmin.nu);
  rep.witness_theta = body.axis_symmetric
                          ? std::atan2(std::abs(std::sin(cmin.normal_angle)),
                                       std::abs(std::cos(cmin.normal_angle)))
                          : std::fmod(cmin.normal_angle, kPi);

  std::vector<ConjectureSample> samples;
  for (double r : r_grid) {
    for (double t : theta_grid) samples.push_back({r, t, 0.0, false});
  }
  parallel_for(samples.size(), workers, [&](std::size_t i) {
    ConjectureSample& s = samples[i];
    try {
      const BodyTransform t = chi_hat_body(body, Frequency::polar(s.r, s.theta), cfg);
      s.scaled_value = std::pow(s.r, 1.5) * std::hypot(t.real, t.imag);
    } catch (const QuadratureBudgetError&) {
      s.failed = true;
    } catch (const NonFiniteIntegrandError&) {
      s.failed = true;
    }
    if (s.failed) s.scaled_value = std::numeric_limits<double>::quiet_NaN();
  });

  for (const ConjectureSample& s : samples) {
    if (s.failed) {
      ++rep.failed_count;
      continue;
    }
    rep.c_est = std::max(rep.c_est, s.scaled_value);
    if (std::abs(s.theta - rep.witness_theta) <= 1e-12) {
      rep.witness_max = std::max(rep.witness_max, s.scaled_value);
    }
    if (s.scaled_value > rep.upper_bound) rep.counterexample_candidate = true;
  }
  rep.sample_count = samples.size();
  if (rep.failed_count * 100 > samples.size()) {
    throw QuadratureBudgetError("conjecture_scan: more than 1% of samples failed", rep.c_est,
                                std::numeric_limits<double>::infinity(), rep.failed_count);
  }
  rep.upper_ok = !rep.counterexample_candidate && rep.c_est <= rep.upper_bound;

  std::ostringstream notes;
  notes << "min curvature " << cmin.nu << " at (" << cmin.x << ", " << cmin.y
        << "); sup estimate over " << samples.size() - rep.failed_count << " samples";
  if (rep.counterexample_candidate) notes << "; bound exceeded: counterexample candidate";
  rep.notes = notes.str();
  rep.samples = std::move(samples);
  return rep;
}

ConjectureReport conjecture_scan(const ConvexBody& body, std::span<const double> r_grid,
                                 const QuadConfig& cfg, unsigned workers) {
  const CurvatureMin cmin = body_curvature_min(body);
  const std::vector<double> thetas = conjecture_theta_grid(body, cmin);
  return conjecture_scan(body, r_grid, thetas, cfg, workers);
}

}  // namespace lpfourier
