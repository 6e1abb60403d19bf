#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "lpfourier/error.hpp"
#include "lpfourier/lpgeom.hpp"

using namespace lpfourier;
using doctest::Approx;

namespace {

// Curvature through three boundary points, extrapolated in the spacing.
double menger(PExponent p, double x, double h) {
  auto k = [&](double hh) {
    const double x0 = x - hh, x1 = x, x2 = x + hh;
    const double y0 = phi(p, x0), y1 = phi(p, x1), y2 = phi(p, x2);
    const double a = std::hypot(x1 - x0, y1 - y0);
    const double b = std::hypot(x2 - x1, y2 - y1);
    const double c = std::hypot(x2 - x0, y2 - y0);
    const double cross = std::abs((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0));
    return 2.0 * cross / (a * b * c);
  };
  return (4.0 * k(h / 2) - k(h)) / 3.0;
}

}  // namespace

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(PExponent(0.99), DomainError);
  CHECK_THROWS_AS(PExponent(2.01), DomainError);
  CHECK_THROWS_AS(PExponent(std::nan("")), DomainError);
  CHECK(PExponent(1.0).is_one());
  CHECK(PExponent(2.0).is_two());
  CHECK_FALSE(PExponent(1.5).is_special());
}

TEST_CASE("phi values and domain") {
  CHECK(phi(PExponent(1.5), 0.5) == Approx(0.74763296333919285).epsilon(1e-14));
  CHECK(phi(PExponent(1.2), 0.3) == Approx(0.79923057444879339).epsilon(1e-14));
  CHECK(phi(PExponent(1.5), 0.0) == 1.0);
  CHECK(phi(PExponent(1.5), 1.0) == 0.0);
  CHECK(phi(PExponent(1.0), 0.25) == 0.75);
  CHECK(phi(PExponent(2.0), 0.6) == Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(phi(PExponent(1.5), -0.1), DomainError);
  CHECK_THROWS_AS(phi(PExponent(1.5), 1.1), DomainError);
  CHECK_THROWS_AS(phi_d1(PExponent(1.5), 0.0), DomainError);
  CHECK_THROWS_AS(phi_d2(PExponent(1.5), 1.0), DomainError);
}

TEST_CASE("phi derivatives against high-precision fixtures") {
  struct Row {
    double p, x, d1, d2, d3, kappa;
  };
  const Row rows[] = {
      {1.5, 0.5, -0.81778809034346852, -1.2650512485385146, -1.5024667595179902, 0.58682758512369488},
      {1.2, 0.3, -0.82203409913583487, -0.71712038285853519, 0.87970740801683833, 0.33058419674986085},
      {1.8, 0.7, -1.0477823002079592, -2.5275305455594494, -9.7053820849857837, 0.83183169421137231},
      {2.0, 0.6, -0.75, -1.953125, -5.4931640625, 1.0},
  };
  for (const Row& r : rows) {
    const PExponent p(r.p);
    CAPTURE(r.p);
    CHECK(phi_d1(p, r.x) == Approx(r.d1).epsilon(1e-13));
    CHECK(phi_d2(p, r.x) == Approx(r.d2).epsilon(1e-13));
    CHECK(phi_d3(p, r.x) == Approx(r.d3).epsilon(1e-12));
    CHECK(curvature(p, r.x) == Approx(r.kappa).epsilon(1e-13));
  }
}

TEST_CASE("derivatives agree with finite differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> up(1.0, 2.0), ux(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    const PExponent p(up(rng));
    const double x = ux(rng);
    const double h = 1e-5;
    const double fd1 = (phi(p, x + h) - phi(p, x - h)) / (2 * h);
    const double fd2 = (phi_d1(p, x + h) - phi_d1(p, x - h)) / (2 * h);
    const double fd3 = (phi_d2(p, x + h) - phi_d2(p, x - h)) / (2 * h);
    CAPTURE(p.value());
    CAPTURE(x);
    CHECK(phi_d1(p, x) == Approx(fd1).epsilon(1e-7).scale(1.0));
    CHECK(phi_d2(p, x) == Approx(fd2).epsilon(1e-6).scale(1.0));
    CHECK(phi_d3(p, x) == Approx(fd3).epsilon(1e-5).scale(1.0));
  }
}

TEST_CASE("derivative overflow is reported") {
  CHECK_THROWS_AS(phi_d2(PExponent(1.0001), std::numeric_limits<double>::denorm_min()),
                  std::overflow_error);
}

TEST_CASE("flat point fixtures") {
  struct Row {
    double p, xs, m, d1, theta;
  };
  const Row rows[] = {
      {1.1, 0.46288770960098444, 3.6830221605496663, -0.97418610988943109, 0.7984731308293039},
      {1.5, 0.3419951893353394, 2.3025196866502416, -0.62996052494743658, 1.0086378424376747},
      {1.9, 0.16994830725361592, 1.2572661233005943, -0.20630230978700189, 1.3673482632151814},
  };
  for (const Row& r : rows) {
    const PExponent p(r.p);
    CAPTURE(r.p);
    CHECK(x_star(p) == Approx(r.xs).epsilon(1e-13));
    CHECK(m_of_p(p) == Approx(r.m).epsilon(1e-13));
    CHECK(phi_d1_at_x_star(p) == Approx(r.d1).epsilon(1e-13));
    CHECK(phi_d1_at_x_star(p) == Approx(phi_d1(p, r.xs)).epsilon(1e-12));
    CHECK(theta_star(p) == Approx(r.theta).epsilon(1e-13));
    CHECK(std::abs(phi_d2(p, x_star(p))) == Approx((r.p - 1) * r.m).epsilon(1e-12));
  }
}

TEST_CASE("m(p) endpoints, monotonicity and continuity at p = 2") {
  CHECK(m_of_p(PExponent(1.0)) == 4.0);
  CHECK(m_of_p(PExponent(2.0)) == 1.0);
  double prev = 4.0;
  for (int i = 1; i <= 1000; ++i) {
    const double v = m_of_p(PExponent(1.0 + i / 1000.0));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(m_of_p(PExponent(2.0 - 1e-9)) == Approx(1.0).epsilon(1e-7));
  CHECK(x_star(PExponent(2.0)) == 0.0);
  CHECK(theta_star(PExponent(2.0)) == std::numbers::pi / 2);
  CHECK_THROWS_AS(theta_star(PExponent(1.0)), DomainError);
}

TEST_CASE("|phi''| is minimised at x* with value (p-1) m(p)") {
  for (double pv : {1.05, 1.3, 1.5, 1.7, 1.95}) {
    const PExponent p(pv);
    const double floor = (pv - 1) * m_of_p(p);
    for (int i = 1; i < 2000; ++i) {
      const double x = i / 2000.0;
      CHECK(std::abs(phi_d2(p, x)) >= floor * (1 - 1e-12));
    }
    // phi''' changes sign at x*
    const double xs = x_star(p);
    CHECK(phi_d3(p, xs * 0.9) * phi_d3(p, std::min(xs * 1.1, 0.999)) < 0.0);
  }
}

TEST_CASE("minimum curvature on the diagonal") {
  for (double pv : {1.1, 1.5, 1.9, 2.0}) {
    const PExponent p(pv);
    double best = 1e300, arg = 0;
    for (int i = 1; i < 100000; ++i) {
      const double x = i / 100000.0;
      const double k = curvature(p, x);
      if (k < best) {
        best = k;
        arg = x;
      }
    }
    CAPTURE(pv);
    CHECK(best == Approx(min_curvature(p)).epsilon(1e-8));
    if (pv < 2.0) CHECK(arg == Approx(std::pow(2.0, -1.0 / pv)).epsilon(1e-4));
  }
  CHECK(min_curvature(PExponent(1.5)) == Approx(0.56123102415468649).epsilon(1e-14));
  CHECK(min_curvature(PExponent(1.0)) == 0.0);
}

TEST_CASE("curvature agrees with a three-point oracle") {
  for (double pv : {1.2, 1.5, 1.8}) {
    for (double x : {0.2, 0.5, 0.8}) {
      const PExponent p(pv);
      CHECK(curvature(p, x) == Approx(menger(p, x, 1e-3)).epsilon(1e-7));
    }
  }
}

TEST_CASE("geometry profile") {
  const GeomProfile g = geom_profile(PExponent(1.5));
  CHECK(g.min_abs_phi2 == Approx(0.5 * 2.3025196866502416).epsilon(1e-13));
  CHECK_FALSE(g.degenerate);
  CHECK(geom_profile(PExponent(2.0)).degenerate);
  CHECK_THROWS_AS(geom_profile(PExponent(1.0)), DomainError);
}
