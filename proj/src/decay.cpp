#include "lpfourier/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lpfourier/error.hpp"
#include "lpfourier/parallel.hpp"

namespace lpfourier {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinScanRadius = 5.0;

void require_open_p(PExponent p, const char* op) {
  if (p.is_special()) {
    throw DomainError(std::string(op) + ": requires 1 < p < 2");
  }
}

}  // namespace

std::vector<double> log_grid(double r_min, double r_max, int per_decade) {
  if (!(r_min > 0.0) || !(r_max > r_min) || per_decade < 1) {
    throw DomainError("log_grid: requires 0 < r_min < r_max and per_decade >= 1");
  }
  std::vector<double> out;
  const int steps = static_cast<int>(std::floor(per_decade * std::log10(r_max / r_min) + 1e-9));
  for (int k = 0; k <= steps; ++k) {
    out.push_back(r_min * std::pow(10.0, static_cast<double>(k) / per_decade));
  }
  if (out.back() < r_max * (1.0 - 1e-12)) out.push_back(r_max);
  return out;
}

std::vector<double> default_theta_grid(PExponent p, int count) {
  if (count < 1) throw DomainError("default_theta_grid: count must be positive");
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(kPi / 4.0 + (kPi / 4.0) * k / count);
  out.push_back(kPi / 2.0);
  if (!p.is_one()) out.push_back(theta_star(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SequenceSpec stationary_sequence(PExponent p, int n_min, int n_max) {
  require_open_p(p, "stationary_sequence");
  if (n_min < 1 || n_max < n_min) {
    throw DomainError("stationary_sequence: requires 1 <= n_min <= n_max");
  }
  const GeomProfile g = geom_profile(p);
  SequenceSpec spec;
  spec.p = p.value();
  spec.theta_star = g.theta_star;
  spec.base_phase = std::cos(g.theta_star) * g.x_star + std::sin(g.theta_star) * phi(p, g.x_star);
  spec.n_min = n_min;
  for (int n = n_min; n <= n_max; ++n) spec.r_values.push_back(2.0 * kPi * n / spec.base_phase);
  return spec;
}

double phase_offset_radius(const SequenceSpec& spec, double r_n) {
  return r_n + kPi / (4.0 * spec.base_phase);
}

double stationary_asymptote(PExponent p) {
  require_open_p(p, "stationary_asymptote");
  const GeomProfile g = geom_profile(p);
  const double s = std::sin(g.theta_star);
  return 1.0 / (std::sqrt(kPi) * std::pow(s, 1.5) * std::sqrt(g.min_abs_phi2));
}

namespace {

void evaluate_sample(PExponent p, EnvelopeSample& s, const QuadConfig& cfg) {
  try {
    const TransformResult t = chi_hat_lp(p, Frequency::polar(s.r, s.theta), cfg);
    const double scale = std::pow(s.r, 1.5);
    s.scaled_value = scale * std::abs(t.value);
    s.err_estimate = scale * t.err_estimate;
    s.method = t.method;
  } catch (const QuadratureBudgetError& e) {
    s.failed = true;
    s.failure = e.what();
  } catch (const NonFiniteIntegrandError& e) {
    s.failed = true;
    s.failure = e.what();
  }
  if (s.failed) {
    s.scaled_value = std::numeric_limits<double>::quiet_NaN();
    s.err_estimate = std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

EnvelopeScan envelope_scan(PExponent p, std::span<const double> r_grid,
                           std::span<const double> theta_grid, const QuadConfig& cfg,
                           unsigned workers) {
  cfg.validate();
  if (r_grid.empty() || theta_grid.empty()) {
    throw DomainError("envelope_scan: empty grid");
  }
  const auto [rmin_it, rmax_it] = std::minmax_element(r_grid.begin(), r_grid.end());
  const double r_min = *rmin_it;
  const double r_max = *rmax_it;
  if (r_min < kMinScanRadius) {
    throw DomainError("envelope_scan: r grid must start at r >= 5");
  }
  for (double t : theta_grid) {
    if (!(t >= kPi / 4.0 - 1e-14 && t <= kPi / 2.0 + 1e-14)) {
      throw DomainError("envelope_scan: theta grid must lie in [pi/4, pi/2]");
    }
  }

  std::vector<EnvelopeSample> samples;
  samples.reserve(r_grid.size() * theta_grid.size());
  for (double r : r_grid) {
    for (double t : theta_grid) {
      EnvelopeSample s;
      s.p = p.value();
      s.r = r;
      s.theta = t;
      samples.push_back(s);
    }
  }

  if (!p.is_one()) {
    const double ts = theta_star(p);
    const bool has_star = std::any_of(theta_grid.begin(), theta_grid.end(),
                                      [ts](double t) { return std::abs(t - ts) <= 1e-12; });
    if (!has_star) {
      throw DomainError("envelope_scan: theta grid must include theta*(p)");
    }
  }
  if (!p.is_special()) {
    const SequenceSpec base = stationary_sequence(p, 1, 1);
    const int n_lo = std::max(1, static_cast<int>(std::ceil(r_min * base.base_phase / (2.0 * kPi))));
    const int n_hi = static_cast<int>(std::floor(r_max * base.base_phase / (2.0 * kPi)));
    if (n_hi >= n_lo) {
      const SequenceSpec seq = stationary_sequence(p, n_lo, n_hi);
      for (double r_n : seq.r_values) {
        EnvelopeSample s;
        s.p = p.value();
        s.theta = seq.theta_star;
        s.r = r_n;
        s.kind = SampleKind::witness;
        samples.push_back(s);
        const double r_off = phase_offset_radius(seq, r_n);
        if (r_off <= r_max) {
          s.r = r_off;
          s.kind = SampleKind::witness_offset;
          samples.push_back(s);
        }
      }
    }
  }

  parallel_for(samples.size(), workers, [&](std::size_t i) { evaluate_sample(p, samples[i], cfg); });

  EnvelopeScan out;
  for (const EnvelopeSample& s : samples) {
    if (s.failed) {
      ++out.failed_count;
    } else {
      out.c_est = std::max(out.c_est, s.scaled_value);
    }
  }
  if (out.failed_count * 100 > samples.size()) {
    throw QuadratureBudgetError("envelope_scan: " + std::to_string(out.failed_count) + " of " +
                                    std::to_string(samples.size()) +
                                    " samples failed (more than 1%)",
                                out.c_est, std::numeric_limits<double>::infinity(),
                                out.failed_count);
  }
  out.samples = std::move(samples);
  return out;
}

std::vector<SequencePoint> sequence_values(PExponent p, const SequenceSpec& spec,
                                           const QuadConfig& cfg, unsigned workers) {
  require_open_p(p, "sequence_values");
  if (spec.p != p.value()) {
    throw DomainError("sequence_values: sequence was generated for a different p");
  }
  const double v = stationary_asymptote(p);
  std::vector<SequencePoint> out(spec.r_values.size());
  parallel_for(out.size(), workers, [&](std::size_t i) {
    const double r = spec.r_values[i];
    const TransformResult t = chi_hat_lp(p, Frequency::polar(r, spec.theta_star), cfg);
    const double scale = std::pow(r, 1.5);
    out[i] = {spec.n_min + static_cast<int>(i), r, scale * std::abs(t.value), v,
              scale * t.err_estimate};
  });
  return out;
}

BoundCheck upper_bound_check(PExponent p, double c_est) {
  if (p.is_one()) {
    throw DomainError("upper_bound_check: the bound is undefined at p = 1");
  }
  BoundCheck b;
  b.c_est = c_est;
  b.bound = kUpperConstant / std::sqrt(p.value() - 1.0);
  b.pass = c_est <= b.bound;
  b.slack = (c_est > 0.0) ? b.bound / c_est : std::numeric_limits<double>::infinity();
  return b;
}

FitResult least_squares_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("least_squares_fit: size mismatch");
  if (x.size() < 4) throw DomainError("least_squares_fit: needs at least 4 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("least_squares_fit: x values are all equal");
  FitResult f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f.max_abs_residual = std::max(f.max_abs_residual, std::abs(y[i] - (f.slope * x[i] + f.intercept)));
  }
  return f;
}

namespace {

void require_blowup_grid(std::span<const double> p_grid) {
  if (p_grid.size() < 4) throw DomainError("blowup_fit: needs at least 4 exponents");
  for (double p : p_grid) {
    if (!(p > 1.0 && p <= 1.5)) throw DomainError("blowup_fit: exponents must lie in (1, 1.5]");
  }
}

}  // namespace

FitResult blowup_fit(std::span<const double> p_grid, int n_ref, const QuadConfig& cfg,
                     unsigned workers) {
  require_blowup_grid(p_grid);
  std::vector<double> xs(p_grid.size());
  std::vector<double> ys(p_grid.size());
  parallel_for(p_grid.size(), workers, [&](std::size_t i) {
    const PExponent p(p_grid[i]);
    const SequenceSpec spec = stationary_sequence(p, n_ref, n_ref);
    const auto vals = sequence_values(p, spec, cfg, 1);
    xs[i] = std::log(p_grid[i] - 1.0);
    ys[i] = std::log(vals.front().scaled_value);
  });
  return least_squares_fit(xs, ys);
}

FitResult asymptote_fit(std::span<const double> p_grid) {
  require_blowup_grid(p_grid);
  std::vector<double> xs;
  std::vector<double> ys;
  for (double pv : p_grid) {
    xs.push_back(std::log(pv - 1.0));
    ys.push_back(std::log(stationary_asymptote(PExponent(pv))));
  }
  return least_squares_fit(xs, ys);
}

}  // namespace lpfourier
