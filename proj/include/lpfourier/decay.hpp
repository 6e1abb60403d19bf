#ifndef LPFOURIER_DECAY_HPP
#define LPFOURIER_DECAY_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "lpfourier/fourier.hpp"
#include "lpfourier/lpgeom.hpp"
#include "lpfourier/oscquad.hpp"

namespace lpfourier {

/// Upper-bound constant: sup |w|^{3/2} |chi_hat| <= kUpperConstant / sqrt(p - 1).
inline const double kUpperConstant = 12.0 * std::pow(2.0, 0.25);
/// Published lower-bound constant, reported alongside results but not asserted.
inline const double kPublishedLowerConstant = std::pow(2.0, 1.75) * std::sqrt(std::numbers::pi);

/// Default radial density of envelope scans (points per decade).
inline constexpr int kDefaultPerDecade = 64;
/// Default number of uniform angles in an envelope scan.
inline constexpr int kDefaultThetaCount = 48;

enum class SampleKind { grid, witness, witness_offset };

struct EnvelopeSample {
  double p = 0.0;
  double r = 0.0;
  double theta = 0.0;
  /// r^{3/2} |chi_hat|; NaN when the evaluation failed.
  double scaled_value = 0.0;
  double err_estimate = 0.0;
  TransformMethod method = TransformMethod::reduction_x;
  SampleKind kind = SampleKind::grid;
  bool failed = false;
  std::string failure;
};

struct EnvelopeScan {
  double c_est = 0.0;
  std::vector<EnvelopeSample> samples;
  std::size_t failed_count = 0;
};

/// r_min * 10^(k / per_decade) up to r_max, with r_max appended.
std::vector<double> log_grid(double r_min, double r_max, int per_decade);

/// `count` uniform angles on [pi/4, pi/2), plus pi/2 and (for p > 1) theta*(p).
std::vector<double> default_theta_grid(PExponent p, int count = 48);

struct SequenceSpec {
  double p = 0.0;
  double theta_star = 0.0;
  /// psi_p(x*; theta*) > 0
  double base_phase = 0.0;
  int n_min = 1;
  /// r_n = 2 pi n / base_phase for n = n_min, n_min + 1, ...
  std::vector<double> r_values;
};

/// Requires 1 < p < 2 and 1 <= n_min <= n_max.
SequenceSpec stationary_sequence(PExponent p, int n_min, int n_max);

/// Radius just past r_n at which the stationary contribution peaks:
/// r_n + pi / (4 base_phase).
double phase_offset_radius(const SequenceSpec& spec, double r_n);

/**
 * Scans r^{3/2} |chi_hat_{B_p}(r cos theta, r sin theta)| over the product grid.
 *
 * For 1 < p < 2 the witness frequencies r_n (cos theta*, sin theta*) that fall
 * inside [r_min, r_max] are added, each together with its phase-offset partner.
 * Failed samples are kept with failed = true and excluded from c_est; more than
 * 1% failures aborts with QuadratureBudgetError. Samples are ordered r-major over
 * the grid, then the witnesses by n; the result does not depend on `workers`.
 */
EnvelopeScan envelope_scan(PExponent p, std::span<const double> r_grid,
                           std::span<const double> theta_grid, const QuadConfig& cfg = {},
                           unsigned workers = 1);

struct SequencePoint {
  int n = 0;
  double r_n = 0.0;
  double scaled_value = 0.0;
  double v_of_p = 0.0;
  double err_estimate = 0.0;
};

/// r_n^{3/2} |chi_hat(omega_n)| along the witness sequence.
std::vector<SequencePoint> sequence_values(PExponent p, const SequenceSpec& spec,
                                           const QuadConfig& cfg = {}, unsigned workers = 1);

/// Leading-order value of the witness sequence,
///   V(p) = 1 / (sqrt(pi) sin^{3/2}(theta*) sqrt((p-1) m(p))).
double stationary_asymptote(PExponent p);

struct BoundCheck {
  bool pass = false;
  double bound = 0.0;
  double c_est = 0.0;
  /// bound / c_est
  double slack = 0.0;
};

/// Compares c_est with kUpperConstant / sqrt(p - 1). Rejects p = 1.
BoundCheck upper_bound_check(PExponent p, double c_est);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
};

/// Ordinary least squares y = slope * x + intercept over at least 4 points.
FitResult least_squares_fit(std::span<const double> x, std::span<const double> y);

/// Slope of log(sequence value at n_ref) against log(p - 1) over p_grid in (1, 1.5].
FitResult blowup_fit(std::span<const double> p_grid, int n_ref, const QuadConfig& cfg = {},
                     unsigned workers = 1);

/// Same fit applied to V(p) directly.
FitResult asymptote_fit(std::span<const double> p_grid);

}  // namespace lpfourier

#endif  // LPFOURIER_DECAY_HPP
