#include "lpfourier/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lpfourier/error.hpp"

namespace lpfourier {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const Frequency& omega) {
  if (!std::isfinite(omega.alpha) || !std::isfinite(omega.beta)) {
    throw DomainError("frequency must be finite");
  }
}

void require_theta_range(double theta, const char* op) {
  // A few ulps of slack so that theta computed by atan2 at alpha == beta is accepted.
  if (!(theta >= kPi / 4.0 - 1e-14 && theta <= kPi / 2.0 + 1e-14)) {
    throw DomainError(std::string(op) + ": theta must lie in [pi/4, pi/2]");
  }
}

}  // namespace

Frequency Frequency::cartesian(double alpha, double beta) {
  return {alpha, beta, std::hypot(alpha, beta), std::atan2(beta, alpha)};
}

Frequency Frequency::polar(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta), r, theta};
}

Frequency reduce_symmetry(const Frequency& omega) {
  require_finite(omega);
  double a = std::abs(omega.alpha);
  double b = std::abs(omega.beta);
  if (a > b) std::swap(a, b);
  return {a, b, omega.r, std::atan2(b, a)};
}

std::string_view to_string(TransformMethod m) {
  switch (m) {
    case TransformMethod::reduction_x:
      return "reduction-x";
    case TransformMethod::reduction_y:
      return "reduction-y";
    case TransformMethod::closed_l1:
      return "closed-l1";
    case TransformMethod::zero_frequency:
      return "zero-frequency";
  }
  return "unknown";
}

PhasePair psi_pair(PExponent p, double theta) {
  require_theta_range(theta, "psi_pair");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Phase psi{[p, c, s](double x) { return c * x + s * phi(p, x); },
            [p, c, s](double x) { return c + s * phi_d1(p, x); },
            [p, s](double x) { return s * phi_d2(p, x); }, "psi_p"};
  Phase psi_tilde{[p, c, s](double x) { return -c * x + s * phi(p, x); },
                  [p, c, s](double x) { return -c + s * phi_d1(p, x); },
                  [p, s](double x) { return s * phi_d2(p, x); }, "psi_tilde_p"};
  return {std::move(psi), std::move(psi_tilde), p, theta};
}

double lp_ball_area(PExponent p, const QuadConfig& cfg) {
  const QuadResult q = integrate_oscillatory([p](double x) { return phi(p, x); }, 0.0, 1.0, 0.0, cfg);
  return 4.0 * q.value;
}

namespace {

// integral_0^1 cos(u x) sin(v phi_p(x)) dx; the combined phase varies by about u + v.
QuadResult slice_integral(PExponent p, double u, double v, const QuadConfig& cfg) {
  return integrate_oscillatory(
      [p, u, v](double x) { return std::cos(u * x) * std::sin(v * phi(p, x)); }, 0.0, 1.0, u + v,
      cfg);
}

TransformResult zero_frequency(PExponent p, const QuadConfig& cfg) {
  return {lp_ball_area(p, cfg) / (2.0 * kPi), 0.0, TransformMethod::zero_frequency};
}

}  // namespace

TransformResult chi_hat_lp(PExponent p, const Frequency& omega, const QuadConfig& cfg,
                           bool prefer_closed_form) {
  const Frequency w = reduce_symmetry(omega);
  if (w.beta == 0.0) return zero_frequency(p, cfg);
  if (prefer_closed_form && p.is_one()) {
    return {chi_hat_l1_closed(w), 0.0, TransformMethod::closed_l1};
  }
  const QuadResult q = slice_integral(p, w.alpha, w.beta, cfg);
  const double scale = 2.0 / (kPi * w.beta);
  return {scale * q.value, scale * q.err_estimate, TransformMethod::reduction_x};
}

TransformResult chi_hat_lp_reduction_y(PExponent p, const Frequency& omega, const QuadConfig& cfg) {
  const Frequency w = reduce_symmetry(omega);
  if (w.alpha == 0.0) {
    throw DomainError("chi_hat_lp_reduction_y: requires a nonzero alpha after reduction");
  }
  const QuadResult q = slice_integral(p, w.beta, w.alpha, cfg);
  const double scale = 2.0 / (kPi * w.alpha);
  return {scale * q.value, scale * q.err_estimate, TransformMethod::reduction_y};
}

PolarIntegrals polar_integrals(PExponent p, double r, double theta, const QuadConfig& cfg) {
  require_theta_range(theta, "polar_integrals");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("polar_integrals: requires r > 0");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // Both phases vary by at most cos + sin over [0,1].
  const double hint = r * (c + s);
  PolarIntegrals out;
  out.psi = integrate_oscillatory(
      [p, r, c, s](double x) { return std::sin(r * (c * x + s * phi(p, x))); }, 0.0, 1.0, hint, cfg);
  out.psi_tilde = integrate_oscillatory(
      [p, r, c, s](double x) { return std::sin(r * (-c * x + s * phi(p, x))); }, 0.0, 1.0, hint,
      cfg);
  return out;
}

TransformResult chi_hat_lp_polar(PExponent p, const Frequency& omega, const QuadConfig& cfg) {
  const Frequency w = reduce_symmetry(omega);
  if (w.beta == 0.0) return zero_frequency(p, cfg);
  const double theta = std::atan2(w.beta, w.alpha);
  const double r = std::hypot(w.alpha, w.beta);
  const PolarIntegrals ints = polar_integrals(p, r, theta, cfg);
  const double scale = 1.0 / (kPi * r * std::sin(theta));
  return {scale * (ints.psi.value + ints.psi_tilde.value),
          scale * (ints.psi.err_estimate + ints.psi_tilde.err_estimate),
          TransformMethod::reduction_x};
}

double chi_hat_l1_closed(const Frequency& omega) {
  const Frequency w = reduce_symmetry(omega);
  const double a = w.alpha;
  const double b = w.beta;
  if (b == 0.0) return 1.0 / kPi;  // area 2 over 2pi
  const double gap = b - a;
  if (gap <= 1e-6 * b) {
    // Expand cos(b) - cos(a) about the midpoint to stay clear of 0/0 on the
    // diagonal; the limit there is -sin(b) / (pi b).
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * gap;
    // (cos b - cos a) / (b - a) = -sin(mid) sin(h) / h
    const double sinc = (h == 0.0) ? 1.0 : std::sin(h) / h;
    return 2.0 * std::sin(mid) * sinc / (kPi * (a + b));
  }
  return -2.0 * (std::cos(b) - std::cos(a)) / (kPi * (b * b - a * a));
}

double l1_decay_bound(const Frequency& omega) {
  const double r = std::hypot(omega.alpha, omega.beta);
  if (r == 0.0) throw DomainError("l1_decay_bound: undefined at the origin");
  return 2.0 / (kPi * r);
}

namespace {

constexpr int kNodesPerPanel = 16;

// Sigmoidal grading map u -> x on [0,1] that flattens algebraic endpoint
// behaviour at both ends; returns x and dx/du.
std::pair<double, double> graded(double u) {
  constexpr double q = 6.0;
  const double a = std::pow(u, q);
  const double b = std::pow(1.0 - u, q);
  const double den = a + b;
  const double x = a / den;
  const double da = q * std::pow(u, q - 1.0);
  const double db = -q * std::pow(1.0 - u, q - 1.0);
  const double dx = (da * b - a * db) / (den * den);
  return {x, dx};
}

}  // namespace

ComplexValue chi_hat_bruteforce(PExponent p, const Frequency& omega, int grid_n) {
  require_finite(omega);
  if (std::hypot(omega.alpha, omega.beta) > 50.0) {
    throw DomainError("chi_hat_bruteforce: |omega| > 50 is outside the certified range");
  }
  if (grid_n < 2 * kNodesPerPanel) {
    throw DomainError("chi_hat_bruteforce: grid_n too small");
  }
  const auto [gl_x, gl_w] = gauss_legendre_rule(kNodesPerPanel);
  const int outer_panels = std::max(1, grid_n / (2 * kNodesPerPanel));  // per half-axis
  const int inner_panels = std::max(1, grid_n / kNodesPerPanel);

  // Outer nodes on (0,1) with weights, mirrored to (-1,0) below.
  std::vector<double> xs;
  std::vector<double> xw;
  for (int k = 0; k < outer_panels; ++k) {
    const double u0 = static_cast<double>(k) / outer_panels;
    const double hu = 1.0 / outer_panels;
    for (int j = 0; j < kNodesPerPanel; ++j) {
      const double u = u0 + 0.5 * hu * (gl_x[j] + 1.0);
      const auto [x, dx] = graded(u);
      xs.push_back(x);
      xw.push_back(0.5 * hu * gl_w[j] * dx);
    }
  }

  double re = 0.0;
  double im = 0.0;
  for (int side = -1; side <= 1; side += 2) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = side * xs[i];
      const double half_height = phi(p, xs[i]);
      if (half_height == 0.0) continue;
      const double hy = 2.0 * half_height / inner_panels;
      double sre = 0.0;
      double sim = 0.0;
      for (int k = 0; k < inner_panels; ++k) {
        const double y0 = -half_height + k * hy;
        for (int j = 0; j < kNodesPerPanel; ++j) {
          const double y = y0 + 0.5 * hy * (gl_x[j] + 1.0);
          const double w = 0.5 * hy * gl_w[j];
          const double arg = x * omega.alpha + y * omega.beta;
          sre += w * std::cos(arg);
          sim -= w * std::sin(arg);
        }
      }
      re += xw[i] * sre;
      im += xw[i] * sim;
    }
  }
  return {re / (2.0 * kPi), im / (2.0 * kPi)};
}

double bessel_j1(double r, const QuadConfig& cfg) {
  if (!std::isfinite(r)) throw DomainError("bessel_j1: r must be finite");
  const QuadResult q = integrate_oscillatory(
      [r](double t) { return std::cos(t - r * std::sin(t)); }, 0.0, kPi, std::abs(r) + 1.0, cfg);
  return q.value / kPi;
}

double disk_transform(double r, const QuadConfig& cfg) {
  if (r == 0.0) return 0.5;
  return bessel_j1(r, cfg) / r;
}

}  // namespace lpfourier
