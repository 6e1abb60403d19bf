#ifndef LPFOURIER_LPGEOM_HPP
#define LPFOURIER_LPGEOM_HPP

// Boundary geometry of the l^p unit ball B_p = {|x|^p + |y|^p <= 1}, 1 <= p <= 2.
//
// The first-quadrant arc of the boundary is the graph of
//   phi_p(x) = (1 - x^p)^(1/p),  0 <= x <= 1.
// Everything here is a closed-form evaluation; nothing iterates.

namespace lpfourier {

/// Validated exponent p in [1, 2].
class PExponent {
 public:
  /// Throws DomainError for p outside [1,2] or non-finite p.
  explicit PExponent(double p);

  double value() const noexcept { return p_; }
  bool is_one() const noexcept { return p_ == 1.0; }
  bool is_two() const noexcept { return p_ == 2.0; }
  /// p = 1 (closed form) or p = 2 (limit conventions).
  bool is_special() const noexcept { return is_one() || is_two(); }

 private:
  double p_;
};

double phi(PExponent p, double x);

// Derivatives of phi_p. Domain errors at x in {0,1}; overflow is thrown as
// std::overflow_error rather than returned as infinity.
double phi_d1(PExponent p, double x);
double phi_d2(PExponent p, double x);
double phi_d3(PExponent p, double x);

/// Abscissa minimising |phi_p''| on [0,1]: ((2-p)/(p+1))^(1/p). Returns 0 at p = 2.
double x_star(PExponent p);

/// m(p) with min |phi_p''| = (p-1) m(p). Decreasing from m(1) = 4 to m(2) = 1.
double m_of_p(PExponent p);

/// phi_p'(x*) from its closed form; well defined on all of [1,2] (0 at p = 2).
double phi_d1_at_x_star(PExponent p);

/// Frequency direction normal to the boundary at (x*, phi_p(x*)).
/// Requires p > 1; returns exactly pi/2 at p = 2.
double theta_star(PExponent p);

/// Curvature of the boundary at (x, phi_p(x)), 0 < x < 1.
double curvature(PExponent p, double x);

/// (p-1) 2^(1/p - 1/2), attained on the diagonal x = y = 2^(-1/p).
double min_curvature(PExponent p);

struct GeomProfile {
  double p;
  double x_star;
  double m_p;
  double phi1_at_xstar;
  double theta_star;
  double min_abs_phi2;
  double min_curvature;
  /// p = 2: x* sits on the boundary of [0,1] and theta* = pi/2.
  bool degenerate;
};

/// Requires p > 1.
GeomProfile geom_profile(PExponent p);

}  // namespace lpfourier

#endif  // LPFOURIER_LPGEOM_HPP
