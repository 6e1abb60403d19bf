#include "lpfourier/oscquad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "lpfourier/error.hpp"

namespace lpfourier {

namespace {

// Kronrod 15-point abscissae on [-1,1] (positive half, descending) and weights.
// Odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double err;
  /// Error is at the roundoff floor; bisecting cannot reduce it.
  bool floored;
};

double checked_eval(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NonFiniteIntegrandError("integrand is not finite at x = " + std::to_string(x), x);
  }
  return v;
}

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked_eval(f, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double resabs = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked_eval(f, center - dx);
    const double f2 = checked_eval(f, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  resabs *= std::abs(half);
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  const double diff = std::abs(kronrod - gauss);
  return {a, b, kronrod, std::max(diff, roundoff), diff <= roundoff};
}

struct Totals {
  double value;
  double err;
};

// Neumaier summation in panel order; the result does not depend on how the
// panels were produced.
Totals exact_totals(std::vector<Panel> panels) {
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  double sum = 0.0;
  double comp = 0.0;
  double err = 0.0;
  for (const Panel& p : panels) {
    const double t = sum + p.value;
    if (std::abs(sum) >= std::abs(p.value)) {
      comp += (sum - t) + p.value;
    } else {
      comp += (p.value - t) + sum;
    }
    sum = t;
    err += p.err;
  }
  return {sum + comp, err};
}

std::vector<double> initial_breakpoints(double a, double b, std::size_t n, double inset) {
  std::vector<double> pts;
  const double width = (b - a) / static_cast<double>(n);
  const double floor_width = inset * (b - a);
  // Grade toward a.
  pts.push_back(a);
  std::vector<double> left;
  for (double w = width * 0.5; w > floor_width * 0.5; w *= 0.5) left.push_back(a + w);
  std::reverse(left.begin(), left.end());
  pts.insert(pts.end(), left.begin(), left.end());
  for (std::size_t i = 1; i < n; ++i) pts.push_back(a + width * static_cast<double>(i));
  // Grade toward b.
  for (double w = width * 0.5; w > floor_width * 0.5; w *= 0.5) pts.push_back(b - w);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("QuadConfig: tolerances must be positive");
  }
  if (max_panels < 2) {
    throw DomainError("QuadConfig: max_panels must be at least 2");
  }
  if (!(endpoint_inset > 0.0 && endpoint_inset <= 1e-3)) {
    throw DomainError("QuadConfig: endpoint_inset must lie in (0, 1e-3]");
  }
  if (panels_per_wavelength < 4) {
    throw DomainError("QuadConfig: panels_per_wavelength must be at least 4");
  }
}

QuadResult integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                                 double frequency_hint, const QuadConfig& cfg) {
  cfg.validate();
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
    throw DomainError("integrate_oscillatory: requires finite a < b");
  }
  if (!(frequency_hint >= 0.0) || !std::isfinite(frequency_hint)) {
    throw DomainError("integrate_oscillatory: frequency_hint must be finite and >= 0");
  }

  const double seed = std::ceil(frequency_hint * (b - a) * cfg.panels_per_wavelength /
                                (2.0 * std::numbers::pi));
  if (seed > static_cast<double>(cfg.max_panels)) {
    throw QuadratureBudgetError("integrate_oscillatory: frequency hint requires more than " +
                                    std::to_string(cfg.max_panels) + " panels",
                                0.0, std::numeric_limits<double>::infinity(), 0);
  }
  const std::size_t n0 = std::max<std::size_t>(2, static_cast<std::size_t>(seed));
  const std::vector<double> pts = initial_breakpoints(a, b, n0, cfg.endpoint_inset);

  std::vector<Panel> panels;
  panels.reserve(pts.size() * 2);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) panels.push_back(gk15(f, pts[i], pts[i + 1]));
  if (panels.size() > cfg.max_panels) {
    const Totals t = exact_totals(panels);
    throw QuadratureBudgetError("integrate_oscillatory: initial panels exceed max_panels",
                                t.value, t.err, panels.size());
  }

  // Max-heap on local error; ties broken by panel index for reproducibility.
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry> heap;
  auto enqueue = [&](std::size_t i) {
    if (!panels[i].floored) heap.emplace(panels[i].err, i);
  };
  for (std::size_t i = 0; i < panels.size(); ++i) enqueue(i);

  Totals totals = exact_totals(panels);
  auto target = [&](double value) { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)); };
  std::size_t since_refresh = 0;

  while (true) {
    if (totals.err <= target(totals.value)) {
      totals = exact_totals(panels);
      if (totals.err <= target(totals.value)) break;
    }
    if (heap.empty()) {
      throw QuadratureBudgetError("integrate_oscillatory: tolerance unreachable at working precision",
                                  totals.value, totals.err, panels.size());
    }
    const std::size_t idx = heap.top().second;
    heap.pop();
    const Panel worst = panels[idx];
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) continue;  // cannot split further; error stays
    if (panels.size() + 1 > cfg.max_panels) {
      throw QuadratureBudgetError("integrate_oscillatory: exceeded max_panels = " +
                                      std::to_string(cfg.max_panels),
                                  totals.value, totals.err, panels.size());
    }
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    panels[idx] = left;
    panels.push_back(right);
    enqueue(idx);
    enqueue(panels.size() - 1);
    totals.value += left.value + right.value - worst.value;
    totals.err += left.err + right.err - worst.err;
    if (++since_refresh == 1024) {
      totals = exact_totals(panels);
      since_refresh = 0;
    }
  }
  return {totals.value, totals.err, panels.size()};
}

QuadResult integrate_phase_sine(const Phase& psi, double r, double a, double b,
                                const QuadConfig& cfg) {
  constexpr int kSamples = 64;
  double variation = 0.0;
  double prev = psi.eval(a);
  for (int i = 1; i <= kSamples; ++i) {
    const double cur = psi.eval(a + (b - a) * i / kSamples);
    variation += std::abs(cur - prev);
    prev = cur;
  }
  const double hint = std::abs(r) * variation / (b - a);
  return integrate_oscillatory([&](double x) { return std::sin(r * psi.eval(x)); }, a, b, hint,
                               cfg);
}

namespace {

// 2 * integral_0^m sin(x^2) dx by its power series; long double absorbs the
// cancellation between terms (largest term ~1e6 at m = 4).
double fresnel_series(double m) {
  const long double mm = m;
  const long double m4 = mm * mm * mm * mm;
  long double term = mm * mm * mm;  // (-1)^n m^(4n+3) / (2n+1)!
  long double sum = 0.0L;
  for (int n = 0; n < 200; ++n) {
    const long double contrib = term / (4.0L * n + 3.0L);
    sum += contrib;
    if (n > 4 && std::abs(contrib) < 1e-24L * std::max(1.0L, std::abs(sum))) break;
    term *= -m4 / ((2.0L * n + 2.0L) * (2.0L * n + 3.0L));
  }
  return static_cast<double>(2.0L * sum);
}

}  // namespace

double fresnel_symmetric(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("fresnel_symmetric: requires finite m > 0");
  }
  constexpr double kSplit = 4.0;
  if (m <= kSplit) return fresnel_series(m);
  QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;
  const QuadResult tail = integrate_oscillatory([](double x) { return std::sin(x * x); }, kSplit,
                                                m, 2.0 * m, cfg);
  return fresnel_series(kSplit) + 2.0 * tail.value;
}

namespace {
void require_positive(double r, double lambda, const char* op) {
  if (!(r > 0.0) || !(lambda > 0.0) || !std::isfinite(r) || !std::isfinite(lambda)) {
    throw DomainError(std::string(op) + ": r and lambda must be finite and positive");
  }
}
}  // namespace

double vdc_bound_first(double r, double lambda) {
  require_positive(r, lambda, "vdc_bound_first");
  return 2.0 / (r * lambda);
}

double vdc_bound_second(double r, double lambda) {
  require_positive(r, lambda, "vdc_bound_second");
  return 6.0 / std::sqrt(r * lambda);
}

double stationary_phase_magnitude(double r, double lambda) {
  require_positive(r, lambda, "stationary_phase_magnitude");
  return std::sqrt(std::numbers::pi) / std::sqrt(r * lambda);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n) {
  if (n < 1) throw DomainError("gauss_legendre_rule: n must be positive");
  std::vector<double> nodes(n);
  std::vector<double> weights(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return {nodes, weights};
}

}  // namespace lpfourier
