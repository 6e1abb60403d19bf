#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"

#include "lpfourier/error.hpp"
#include "lpfourier/oscquad.hpp"

using namespace lpfourier;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("config validation") {
  QuadConfig c;
  CHECK_NOTHROW(c.validate());
  c.abs_tol = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.endpoint_inset = 0.1;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.panels_per_wavelength = 2;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK_THROWS_AS(integrate_oscillatory([](double) { return 1.0; }, 1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("simple closed forms") {
  const QuadResult r = integrate_oscillatory([](double x) { return std::sin(10 * x); }, 0, 1, 10);
  CHECK(r.value == Approx((1 - std::cos(10.0)) / 10).epsilon(1e-12));
  CHECK(r.err_estimate <= 1e-10);

  const QuadResult z = integrate_oscillatory([](double) { return 0.0; }, 0, 1, 100);
  CHECK(z.value == 0.0);
  CHECK(z.err_estimate == 0.0);
}

TEST_CASE("random integrands with known antiderivatives") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  QuadConfig cfg;
  cfg.abs_tol = 1e-12;
  cfg.rel_tol = 1e-11;
  for (int i = 0; i < 100; ++i) {
    const double k = std::pow(10.0, 3.0 * u(rng));
    const double ph = 2 * pi * u(rng);
    const double c0 = u(rng) - 0.5, c1 = u(rng) - 0.5, c2 = u(rng) - 0.5;
    const double a = u(rng), b = a + 0.1 + u(rng);
    auto f = [=](double x) { return std::cos(k * x + ph) + c0 + c1 * x + c2 * x * x; };
    auto F = [=](double x) {
      return std::sin(k * x + ph) / k + c0 * x + c1 * x * x / 2 + c2 * x * x * x / 3;
    };
    const QuadResult r = integrate_oscillatory(f, a, b, k, cfg);
    CAPTURE(k);
    CHECK(std::abs(r.value - (F(b) - F(a))) <= 1e-10);
  }
}

TEST_CASE("integrable endpoint singularity") {
  // integral of x^(-1/2) over [0, 1]
  QuadConfig cfg;
  cfg.endpoint_inset = 1e-12;
  const QuadResult r = integrate_oscillatory([](double x) { return 1 / std::sqrt(x); }, 0, 1, 0, cfg);
  CHECK(r.value == Approx(2.0).epsilon(1e-5));
}

TEST_CASE("budget and non-finite failures") {
  QuadConfig tiny;
  tiny.max_panels = 8;
  CHECK_THROWS_AS(integrate_oscillatory([](double x) { return std::sin(1e4 * x); }, 0, 1, 1e4, tiny),
                  QuadratureBudgetError);
  QuadConfig cfg;
  cfg.max_panels = 64;
  try {
    integrate_oscillatory([](double x) { return std::sin(1 / x); }, 0, 1, 1, cfg);
    FAIL("expected a budget failure");
  } catch (const QuadratureBudgetError& e) {
    CHECK(e.panels_used() <= 64);
    CHECK(std::isfinite(e.partial_value()));
  }
  CHECK_THROWS_AS(integrate_oscillatory([](double x) { return x > 0.5 ? std::nan("") : 1.0; }, 0, 1, 1),
                  NonFiniteIntegrandError);
}

TEST_CASE("results are bitwise reproducible") {
  auto f = [](double x) { return std::sin(300 * x * x) * std::exp(-x); };
  const QuadResult a = integrate_oscillatory(f, 0, 1, 600);
  const QuadResult b = integrate_oscillatory(f, 0, 1, 600);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(a.panels_used == b.panels_used);
}

TEST_CASE("Fresnel integral fixtures") {
  struct Row {
    double m, value;
  };
  const Row rows[] = {{1, 0.620536603446762},  {2, 1.60955297868751},   {4, 1.49426768929623},
                      {10, 1.16734179985925}, {30, 1.25108743820049}, {100, 1.26283584373387}};
  for (const Row& r : rows) {
    CAPTURE(r.m);
    CHECK(fresnel_symmetric(r.m) == Approx(r.value).epsilon(1e-12));
  }
  CHECK_THROWS_AS(fresnel_symmetric(0.0), DomainError);
}

TEST_CASE("Fresnel tail bound") {
  const double limit = std::sqrt(pi / 2);
  for (double m = 10; m <= 100; m += 0.5) {
    CHECK(std::abs(fresnel_symmetric(m) - limit) <= 2 / m);
  }
}

TEST_CASE("bound helpers") {
  CHECK(vdc_bound_first(4, 0.5) == Approx(1.0));
  CHECK(vdc_bound_second(1, 36) == Approx(1.0));
  CHECK(stationary_phase_magnitude(pi, 1) == Approx(1.0));
  CHECK_THROWS_AS(vdc_bound_first(0, 1), DomainError);
  CHECK_THROWS_AS(vdc_bound_second(1, -1), DomainError);
  CHECK_THROWS_AS(stationary_phase_magnitude(1, 0), DomainError);
}

TEST_CASE("van der Corput bounds hold on sample phases") {
  Phase lin{[](double x) { return x + x * x; }, [](double x) { return 1 + 2 * x; },
            [](double) { return 2.0; }, "x + x^2"};
  Phase quad{[](double x) { return (x - 0.3) * (x - 0.3); }, [](double x) { return 2 * (x - 0.3); },
             [](double) { return 2.0; }, "(x - 0.3)^2"};
  for (double r : {1.0, 10.0, 100.0, 1e3, 1e4}) {
    CHECK(std::abs(integrate_phase_sine(lin, r, 0, 1).value) <= vdc_bound_first(r, 1.0));
    CHECK(std::abs(integrate_phase_sine(quad, r, 0, 1).value) <= vdc_bound_second(r, 2.0));
  }
}

TEST_CASE("stationary phase matches the Fresnel reduction") {
  // integral_0^1 sin(r (x - 1/2)^2) dx = fresnel_symmetric(sqrt(r) / 2) / sqrt(r)
  Phase psi{[](double x) { return (x - 0.5) * (x - 0.5); }, [](double x) { return 2 * (x - 0.5); },
            [](double) { return 2.0; }, "(x - 1/2)^2"};
  QuadConfig cfg;
  cfg.abs_tol = 1e-12;
  for (double r : {1e2, 1e3, 1e4}) {
    const double direct = integrate_phase_sine(psi, r, 0, 1, cfg).value;
    CHECK(direct == Approx(fresnel_symmetric(std::sqrt(r) / 2) / std::sqrt(r)).epsilon(1e-8));
  }
  double prev_gap = 1.0;
  for (double r : {1e2, 1e4, 1e6}) {
    const double ratio = std::abs(integrate_phase_sine(psi, r, 0, 1, cfg).value) /
                         stationary_phase_magnitude(r, 2.0);
    const double gap = std::abs(ratio - 1);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 2e-3);
}

TEST_CASE("Gauss-Legendre rule") {
  for (int n : {1, 2, 5, 16, 40}) {
    const auto [x, w] = gauss_legendre_rule(n);
    REQUIRE(x.size() == static_cast<std::size_t>(n));
    double wsum = 0, moment = 0;
    for (int i = 0; i < n; ++i) {
      wsum += w[i];
      moment += w[i] * std::pow(x[i], 2 * n - 2);
    }
    CHECK(wsum == Approx(2.0).epsilon(1e-14));
    CHECK(moment == Approx(2.0 / (2 * n - 1)).epsilon(1e-12));
  }
}
