#ifndef LPFOURIER_OSCQUAD_HPP
#define LPFOURIER_OSCQUAD_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lpfourier {

/// A real phase function psi with its first two derivatives.
struct Phase {
  std::function<double(double)> eval;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
  std::string label;
};

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  std::size_t max_panels = std::size_t{1} << 20;
  /// Endpoint grading floor: the panels touching a and b are halved until
  /// their width is at most endpoint_inset * (b - a).
  double endpoint_inset = 1e-6;
  int panels_per_wavelength = 8;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t panels_used = 0;
};

/**
 * Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
 *
 * The interval is seeded with ceil(frequency_hint * (b - a) * panels_per_wavelength / 2pi)
 * uniform panels, graded geometrically toward both endpoints, and then the panel
 * with the largest local error is bisected until the summed error estimate falls
 * below max(abs_tol, rel_tol * |value|).
 *
 * frequency_hint is the typical phase rate of the integrand (radians per unit length).
 * The result is a deterministic function of (f, a, b, frequency_hint, cfg).
 *
 * Panels whose Kronrod-Gauss difference is already below the roundoff floor
 * 50 eps * integral |f| are not bisected further.
 *
 * Throws QuadratureBudgetError when max_panels is exhausted or only floored panels
 * remain above tolerance, and NonFiniteIntegrandError when f returns a non-finite value.
 */
QuadResult integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                                 double frequency_hint, const QuadConfig& cfg = {});

/// Integral of sin(r * psi(x)) over [a, b]; the frequency hint is taken from
/// r * |psi'| sampled across the interval.
QuadResult integrate_phase_sine(const Phase& psi, double r, double a, double b,
                                const QuadConfig& cfg = {});

/// Symmetric Fresnel sine integral: integral of sin(x^2) over [-m, m].
/// Power series up to m = 4, graded quadrature on [4, m] beyond.
double fresnel_symmetric(double m);

// van der Corput bounds for |integral of sin(r psi)|.
/// |psi'| >= lambda with psi' monotone: 2 / (r lambda).
double vdc_bound_first(double r, double lambda);
/// |psi''| >= lambda: 6 / sqrt(r lambda).
double vdc_bound_second(double r, double lambda);

/// Leading stationary-phase magnitude sqrt(pi) / sqrt(r lambda), for a phase that
/// vanishes at its non-degenerate stationary point with |psi''| = lambda there.
double stationary_phase_magnitude(double r, double lambda);

/// n-point Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n);

}  // namespace lpfourier

#endif  // LPFOURIER_OSCQUAD_HPP
