#ifndef LPFOURIER_CONVEX_PROBE_HPP
#define LPFOURIER_CONVEX_PROBE_HPP

// Convex bodies described by two graphs over [x0, x1]:
//   K = {(x, y) : x0 <= x <= x1, lower(x) <= y <= upper(x)}
// and the same Fourier machinery applied to them, to test the minimum-curvature
// decay bound on bodies other than B_p.

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "lpfourier/fourier.hpp"
#include "lpfourier/lpgeom.hpp"
#include "lpfourier/oscquad.hpp"

namespace lpfourier {

struct GraphFunction {
  std::function<double(double)> f;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

struct ConvexBody {
  std::string label;
  double x0 = -1.0;
  double x1 = 1.0;
  GraphFunction upper;  ///< concave
  GraphFunction lower;  ///< convex
  /// Invariant under (x, y) -> (-x, -y).
  bool centrally_symmetric = false;
  /// Invariant under x -> -x and under y -> -y separately.
  bool axis_symmetric = false;
  /// The same body with the coordinates swapped, when a y-graph description is known.
  std::shared_ptr<const ConvexBody> transposed;

  /// Samples the graphs and throws DomainError if the body is not closed at the
  /// endpoints, has lower > upper, or fails the concavity/convexity sign checks.
  void validate(int samples = 257) const;
};

ConvexBody make_ellipse(double a, double b);
ConvexBody make_disk();
/// {|x/a|^p + |y/b|^p <= 1}, p in [1, 2].
ConvexBody make_superellipse(double a, double b, double p);
ConvexBody make_lp_body(PExponent p);
/// Polynomial graphs (coefficients in increasing degree) over [x0, x1].
ConvexBody make_poly_body(double x0, double x1, std::vector<double> upper_coeffs,
                          std::vector<double> lower_coeffs, std::string label = "custom-poly");

/// Builds a body from `{"label": str, "kind": "lp"|"ellipse"|"superellipse"|"custom-poly-coeffs",
/// "params": {...}}` and validates it. Throws DomainError on a malformed definition.
ConvexBody body_from_json(const nlohmann::json& j);

struct CurvatureMin {
  double nu = 0.0;
  double x = 0.0;
  double y = 0.0;
  /// Direction of the outward normal at (x, y), in [0, 2pi).
  double normal_angle = 0.0;
};

/// Minimum boundary curvature over both graphs (and the transposed graphs when
/// available) on a grid of grid_n midpoints per arc, followed by one local
/// refinement around the best sample. Arc ends with finite curvature are also
/// candidates. Requires grid_n >= 1000.
CurvatureMin body_curvature_min(const ConvexBody& body, int grid_n = 4000);

struct BodyTransform {
  double real = 0.0;
  double imag = 0.0;
  double err_estimate = 0.0;
  TransformMethod method = TransformMethod::reduction_x;
};

/// chi_hat_K(omega) by slicing. Centrally symmetric bodies skip the imaginary part
/// (returned as 0) unless full_complex is set.
BodyTransform chi_hat_body(const ConvexBody& body, const Frequency& omega,
                           const QuadConfig& cfg = {}, bool full_complex = false);

/// Uniform angles over [0, pi/2] for axis-symmetric bodies, [0, pi) otherwise,
/// plus the folded normal direction at the minimum-curvature point.
std::vector<double> conjecture_theta_grid(const ConvexBody& body, const CurvatureMin& cmin,
                                          int count = 48);

struct ConjectureSample {
  double r = 0.0;
  double theta = 0.0;
  double scaled_value = 0.0;
  bool failed = false;
};

struct ConjectureReport {
  std::string label;
  double nu = 0.0;
  double c_est = 0.0;
  /// kUpperConstant / sqrt(nu)
  double upper_bound = 0.0;
  /// kPublishedLowerConstant / sqrt(nu), for reference only.
  double lower_reference = 0.0;
  bool upper_ok = false;
  double witness_theta = 0.0;
  double witness_max = 0.0;
  /// Some sample exceeded upper_bound.
  bool counterexample_candidate = false;
  std::size_t sample_count = 0;
  std::size_t failed_count = 0;
  std::string notes;
  std::vector<ConjectureSample> samples;
};

/// Scans r^{3/2} |chi_hat_K| over r_grid x theta_grid. Rejects bodies with nu = 0.
ConjectureReport conjecture_scan(const ConvexBody& body, std::span<const double> r_grid,
                                 std::span<const double> theta_grid, const QuadConfig& cfg = {},
                                 unsigned workers = 1);

/// As above with the default theta grid for the body.
ConjectureReport conjecture_scan(const ConvexBody& body, std::span<const double> r_grid,
                                 const QuadConfig& cfg = {}, unsigned workers = 1);

}  // namespace lpfourier

#endif  // LPFOURIER_CONVEX_PROBE_HPP
