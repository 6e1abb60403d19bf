#include "lpfourier/lpgeom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lpfourier/error.hpp"

namespace lpfourier {

namespace {

void require_closed_unit(double x, const char* op) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(op) + ": x must lie in [0,1], got " + std::to_string(x));
  }
}

void require_open_unit(double x, const char* op) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError(std::string(op) + ": x must lie in (0,1), got " + std::to_string(x));
  }
}

double checked(double v, const char* op) {
  if (!std::isfinite(v)) {
    throw std::overflow_error(std::string(op) + ": result is not finite");
  }
  return v;
}

}  // namespace

PExponent::PExponent(double p) : p_(p) {
  if (!std::isfinite(p) || p < 1.0 || p > 2.0) {
    throw DomainError("p must be a finite value in [1,2], got " + std::to_string(p));
  }
}

double phi(PExponent p, double x) {
  require_closed_unit(x, "phi");
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  const double pv = p.value();
  if (p.is_one()) return 1.0 - x;
  return std::pow(1.0 - std::pow(x, pv), 1.0 / pv);
}

double phi_d1(PExponent p, double x) {
  require_open_unit(x, "phi_d1");
  const double pv = p.value();
  const double xp = std::pow(x, pv);
  return checked(-std::pow(x, pv - 1.0) * std::pow(1.0 - xp, 1.0 / pv - 1.0), "phi_d1");
}

double phi_d2(PExponent p, double x) {
  require_open_unit(x, "phi_d2");
  const double pv = p.value();
  const double xp = std::pow(x, pv);
  return checked(-(pv - 1.0) * std::pow(x, pv - 2.0) * std::pow(1.0 - xp, 1.0 / pv - 2.0),
                 "phi_d2");
}

double phi_d3(PExponent p, double x) {
  require_open_unit(x, "phi_d3");
  const double pv = p.value();
  const double xp = std::pow(x, pv);
  return checked(-(pv - 1.0) * std::pow(x, pv - 3.0) * std::pow(1.0 - xp, 1.0 / pv - 3.0) *
                     (xp * (pv + 1.0) + pv - 2.0),
                 "phi_d3");
}

double x_star(PExponent p) {
  const double pv = p.value();
  if (p.is_two()) return 0.0;
  return std::pow((2.0 - pv) / (pv + 1.0), 1.0 / pv);
}

double m_of_p(PExponent p) {
  const double pv = p.value();
  if (p.is_two()) return 1.0;
  const double tail = std::pow(2.0 * pv - 1.0, 1.0 / pv - 2.0) * std::pow(pv + 1.0, 1.0 + 1.0 / pv);
  // (2-p)^(1-2/p) is a 0^0 form as p -> 2; take it through the logarithm.
  if (pv > 2.0 - 1e-8) {
    return std::exp((1.0 - 2.0 / pv) * std::log(2.0 - pv)) * tail;
  }
  return std::pow(2.0 - pv, 1.0 - 2.0 / pv) * tail;
}

double phi_d1_at_x_star(PExponent p) {
  const double pv = p.value();
  return -std::pow((2.0 - pv) / (2.0 * pv - 1.0), 1.0 - 1.0 / pv);
}

double theta_star(PExponent p) {
  if (p.is_one()) {
    throw DomainError("theta_star: requires p > 1");
  }
  if (p.is_two()) return std::numbers::pi / 2.0;
  return std::atan2(1.0, -phi_d1_at_x_star(p));
}

double curvature(PExponent p, double x) {
  require_open_unit(x, "curvature");
  const double d1 = phi_d1(p, x);
  const double d2 = phi_d2(p, x);
  const double h = std::hypot(1.0, d1);
  return std::abs(d2) / h / h / h;
}

double min_curvature(PExponent p) {
  const double pv = p.value();
  return (pv - 1.0) * std::pow(2.0, 1.0 / pv - 0.5);
}

GeomProfile geom_profile(PExponent p) {
  if (p.is_one()) {
    throw DomainError("geom_profile: requires p > 1");
  }
  GeomProfile g{};
  g.p = p.value();
  g.x_star = x_star(p);
  g.m_p = m_of_p(p);
  g.phi1_at_xstar = phi_d1_at_x_star(p);
  g.theta_star = theta_star(p);
  g.min_abs_phi2 = (g.p - 1.0) * g.m_p;
  g.min_curvature = min_curvature(p);
  g.degenerate = p.is_two();
  return g;
}

}  // namespace lpfourier
