#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "lpfourier/convex_probe.hpp"
#include "lpfourier/decay.hpp"
#include "lpfourier/error.hpp"

using namespace lpfourier;
using doctest::Approx;
using std::numbers::pi;

namespace {

// (1 / 2pi) * double integral of exp(-i (alpha x + beta y)) over the body, by
// composite Gauss-Legendre in x and a Gauss-Legendre rule per column in y.
ComplexValue brute(const ConvexBody& k, double alpha, double beta) {
  const auto [gx, gw] = gauss_legendre_rule(20);
  const int panels = 200;
  const double h = (k.x1 - k.x0) / panels;
  double re = 0, im = 0;
  for (int i = 0; i < panels; ++i) {
    for (std::size_t a = 0; a < gx.size(); ++a) {
      const double x = k.x0 + h * (i + 0.5 * (gx[a] + 1));
      const double lo = k.lower.f(x), hi = k.upper.f(x);
      double cre = 0, cim = 0;
      for (std::size_t b = 0; b < gx.size(); ++b) {
        const double y = lo + 0.5 * (hi - lo) * (gx[b] + 1);
        const double ph = alpha * x + beta * y;
        cre += gw[b] * std::cos(ph);
        cim -= gw[b] * std::sin(ph);
      }
      const double wy = 0.5 * (hi - lo);
      re += 0.5 * h * gw[a] * wy * cre;
      im += 0.5 * h * gw[a] * wy * cim;
    }
  }
  return {re / (2 * pi), im / (2 * pi)};
}

ConvexBody lopsided_lens() {
  // {-(1 - x^2)/2 <= y <= 1 - x^2}: smooth arcs, not centrally symmetric
  return make_poly_body(-1, 1, {1, 0, -1}, {-0.5, 0, 0.5}, "lopsided-lens");
}

}  // namespace

TEST_CASE("body validation") {
  CHECK_NOTHROW(make_disk().validate());
  CHECK_NOTHROW(make_ellipse(2, 1).validate());
  CHECK_NOTHROW(make_superellipse(1.5, 0.5, 1.3).validate());
  CHECK_NOTHROW(lopsided_lens().validate());
  CHECK_THROWS_AS(make_poly_body(-1, 1, {-1, 0, 1}, {1, 0, -1}).validate(), DomainError);
  CHECK_THROWS_AS(make_poly_body(-1, 1, {1, 0, 1}, {-1, 0, 1}).validate(), DomainError);
  CHECK_THROWS_AS(make_ellipse(-1, 1), DomainError);
}

TEST_CASE("minimum curvature") {
  CHECK(body_curvature_min(make_disk()).nu == Approx(1.0).epsilon(1e-9));
  const CurvatureMin e = body_curvature_min(make_ellipse(2, 1));
  CHECK(e.nu == Approx(0.25).epsilon(1e-9));
  CHECK(std::abs(e.x) < 1e-3);
  CHECK(std::abs(std::abs(e.y) - 1) < 1e-6);
  CHECK(body_curvature_min(make_lp_body(PExponent(1.5))).nu ==
        Approx(0.56123102415468649).epsilon(1e-8));
  // arcs of y = +-(1 - x^2): 2 / (1 + 4x^2)^(3/2) is smallest at the corners
  CHECK(body_curvature_min(make_poly_body(-1, 1, {1, 0, -1}, {-1, 0, 1})).nu ==
        Approx(2 / std::pow(5.0, 1.5)).epsilon(1e-8));
}

TEST_CASE("ellipse transform is a scaled disk transform") {
  const double a = 2, b = 1;
  const ConvexBody e = make_ellipse(a, b);
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 20; ++i) {
    const Frequency w = Frequency::polar(1 + 150 * u(rng), 2 * pi * u(rng));
    const BodyTransform t = chi_hat_body(e, w, {}, true);
    const double ref = a * b * disk_transform(std::hypot(a * w.alpha, b * w.beta));
    CHECK(std::abs(t.real - ref) <= 1e-9);
    CHECK(std::abs(t.imag) <= 1e-9);
  }
}

TEST_CASE("B_p body agrees with the l^p transform") {
  for (double pv : {1.2, 1.5, 1.9}) {
    const ConvexBody k = make_lp_body(PExponent(pv));
    const ConvexBody s = make_superellipse(1, 1, pv);
    for (auto [al, be] : {std::pair{3.0, 4.0}, {-7.0, 2.5}, {0.0, 60.0}, {120.0, -33.0}}) {
      const Frequency w = Frequency::cartesian(al, be);
      const double ref = chi_hat_lp(PExponent(pv), w).value;
      CHECK(std::abs(chi_hat_body(k, w).real - ref) <= 1e-8);
      CHECK(std::abs(chi_hat_body(s, w).real - ref) <= 1e-8);
    }
  }
}

TEST_CASE("general bodies against a two-dimensional oracle") {
  const ConvexBody lens = lopsided_lens();
  const ConvexBody super = make_superellipse(1.5, 0.7, 1.6);
  for (auto [al, be] : {std::pair{0.0, 0.0}, {3.0, 4.0}, {-5.0, 1.5}, {12.0, -9.0}, {0.5, 20.0}}) {
    CAPTURE(al);
    CAPTURE(be);
    const Frequency w = Frequency::cartesian(al, be);
    const BodyTransform t = chi_hat_body(lens, w, {}, true);
    const ComplexValue o = brute(lens, al, be);
    CHECK(std::abs(t.real - o.real) <= 1e-9);
    CHECK(std::abs(t.imag - o.imag) <= 1e-9);
    const BodyTransform s = chi_hat_body(super, w, {}, true);
    CHECK(std::abs(s.real - brute(super, al, be).real) <= 1e-7);
    CHECK(std::abs(s.imag) <= 1e-9);
  }
  // the lopsided lens has a genuinely complex transform
  CHECK(std::abs(chi_hat_body(lens, Frequency::cartesian(1, 2), {}, true).imag) > 1e-3);
}

TEST_CASE("conjecture scan") {
  const std::vector<double> r = log_grid(5, 500, 8);
  const ConjectureReport d = conjecture_scan(make_disk(), r);
  CHECK(d.upper_ok);
  CHECK_FALSE(d.counterexample_candidate);
  CHECK(d.upper_bound == Approx(kUpperConstant));
  CHECK(d.c_est == Approx(std::sqrt(2 / pi)).epsilon(0.02));

  const ConjectureReport e = conjecture_scan(make_ellipse(2, 1), r);
  CHECK(e.upper_ok);
  CHECK(e.nu == Approx(0.25).epsilon(1e-9));
  CHECK(e.upper_bound == Approx(kUpperConstant / 0.5));
  // the flat side of the ellipse drives the envelope: twice the disk value
  CHECK(e.c_est == Approx(2 * std::sqrt(2 / pi)).epsilon(0.02));
  CHECK(std::abs(std::sin(e.witness_theta)) == Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(conjecture_scan(make_lp_body(PExponent(1)), r), DomainError);
}

TEST_CASE("body definitions from JSON") {
  using nlohmann::json;
  const ConvexBody a = body_from_json(json::parse(R"({"label":"e","kind":"ellipse","params":{"a":2,"b":1}})"));
  CHECK(a.label == "e");
  CHECK(a.x1 == 2);
  const ConvexBody b = body_from_json(json::parse(R"({"kind":"lp","params":{"p":1.5}})"));
  CHECK(b.centrally_symmetric);
  const ConvexBody c = body_from_json(
      json::parse(R"({"kind":"custom-poly-coeffs","params":{"x0":-1,"x1":1,"upper":[1,0,-1],"lower":[-0.5,0,0.5]}})"));
  CHECK(c.upper.f(0) == 1);
  CHECK_NOTHROW(body_from_json(json::parse(R"({"kind":"superellipse","params":{"a":1,"b":2,"p":1.4}})")));

  CHECK_THROWS_AS(body_from_json(json::parse(R"({"kind":"triangle","params":{}})")), DomainError);
  CHECK_THROWS_AS(body_from_json(json::parse(R"({"kind":"ellipse","params":{"a":2}})")), DomainError);
  CHECK_THROWS_AS(body_from_json(json::parse(R"({"kind":"lp","params":{"p":3}})")), DomainError);
  CHECK_THROWS_AS(body_from_json(json::parse(
                      R"({"kind":"custom-poly-coeffs","params":{"x0":-1,"x1":1,"upper":[-1,0,1],"lower":[1,0,-1]}})")),
                  DomainError);
}
