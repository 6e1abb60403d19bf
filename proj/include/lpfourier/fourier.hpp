#ifndef LPFOURIER_FOURIER_HPP
#define LPFOURIER_FOURIER_HPP

// Fourier transform of the indicator of B_p, normalised as
//   chi_hat(alpha, beta) = (1/2pi) * integral over B_p of exp(-i(x alpha + y beta)) dx dy.
// The transform is real and even in each argument, and symmetric under
// swapping alpha and beta.

#include <string_view>

#include "lpfourier/lpgeom.hpp"
#include "lpfourier/oscquad.hpp"

namespace lpfourier {

/// A frequency carried in Cartesian and polar form at once.
struct Frequency {
  double alpha = 0.0;
  double beta = 0.0;
  double r = 0.0;
  double theta = 0.0;

  static Frequency cartesian(double alpha, double beta);
  static Frequency polar(double r, double theta);
};

/// Canonical representative with 0 <= alpha <= beta. The transform value is unchanged.
Frequency reduce_symmetry(const Frequency& omega);

enum class TransformMethod { reduction_x, reduction_y, closed_l1, zero_frequency };

std::string_view to_string(TransformMethod m);

struct TransformResult {
  double value = 0.0;
  double err_estimate = 0.0;
  TransformMethod method = TransformMethod::reduction_x;
};

/// psi(x) = cos(theta) x + sin(theta) phi_p(x) and psi_tilde(x) = -cos(theta) x + sin(theta) phi_p(x).
struct PhasePair {
  Phase psi;
  Phase psi_tilde;
  PExponent p;
  double theta;
};

/// Requires theta in [pi/4, pi/2].
PhasePair psi_pair(PExponent p, double theta);

/**
 * chi_hat for B_p by slicing along x:
 *   (2 / (pi beta)) * integral_0^1 cos(alpha x) sin(beta phi_p(x)) dx
 * evaluated at the symmetry-reduced frequency (beta >= alpha >= 0). The origin
 * returns area(B_p) / 2pi.
 *
 * When prefer_closed_form is set and p = 1, the closed form is used instead
 * (method = closed_l1).
 */
TransformResult chi_hat_lp(PExponent p, const Frequency& omega, const QuadConfig& cfg = {},
                           bool prefer_closed_form = false);

/// Same transform by slicing along y: (2 / (pi alpha)) * integral_0^1 cos(beta y) sin(alpha phi_p(y)) dy.
/// Applied to the reduced frequency; requires alpha != 0 after reduction.
TransformResult chi_hat_lp_reduction_y(PExponent p, const Frequency& omega,
                                       const QuadConfig& cfg = {});

/// The two sine integrals of the polar split form at (r, theta).
struct PolarIntegrals {
  QuadResult psi;        ///< integral_0^1 sin(r psi(x)) dx
  QuadResult psi_tilde;  ///< integral_0^1 sin(r psi_tilde(x)) dx
};

/// Requires r > 0 and theta in [pi/4, pi/2].
PolarIntegrals polar_integrals(PExponent p, double r, double theta, const QuadConfig& cfg = {});

/// chi_hat = (1 / (pi r sin theta)) * (I_psi + I_psi_tilde), at the reduced frequency.
TransformResult chi_hat_lp_polar(PExponent p, const Frequency& omega, const QuadConfig& cfg = {});

/// Closed form for B_1: -2 (cos beta - cos alpha) / (pi (beta^2 - alpha^2)),
/// with removable singularities on alpha = beta and at the origin filled in.
double chi_hat_l1_closed(const Frequency& omega);

/// (2/pi) / |omega|, the B_1 decay bound.
double l1_decay_bound(const Frequency& omega);

struct ComplexValue {
  double real = 0.0;
  double imag = 0.0;
};

/// Direct tensor-product 2-D quadrature of the defining integral over B_p.
/// Independent of the 1-D reductions; refuses |omega| > 50.
/// grid_n is the approximate number of nodes per axis.
ComplexValue chi_hat_bruteforce(PExponent p, const Frequency& omega, int grid_n);

/// area(B_p) = 4 * integral_0^1 phi_p(x) dx.
double lp_ball_area(PExponent p, const QuadConfig& cfg = {});

/// J_1(r) from (1/pi) * integral_0^pi cos(t - r sin t) dt.
double bessel_j1(double r, const QuadConfig& cfg = {});

/// Transform of the unit disk, J_1(r) / r (1/2 at r = 0), via bessel_j1.
double disk_transform(double r, const QuadConfig& cfg = {});

}  // namespace lpfourier

#endif  // LPFOURIER_FOURIER_HPP
