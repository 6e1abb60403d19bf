#include "lpfourier/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

#ifndef LPFOURIER_VERSION
#define LPFOURIER_VERSION "0.0.0"
#endif

namespace lpfourier {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

std::string_view tool_version() { return LPFOURIER_VERSION; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

RunHeader envelope_header(double p, double r_min, double r_max, int per_decade, int theta_count,
                          const QuadConfig& cfg, bool with_timestamp) {
  RunHeader h;
  h.command = "envelope";
  h.config = {{"p", p},
              {"r_min", r_min},
              {"r_max", r_max},
              {"per_decade", per_decade},
              {"theta_count", theta_count},
              {"abs_tol", cfg.abs_tol},
              {"rel_tol", cfg.rel_tol},
              {"max_panels", cfg.max_panels},
              {"endpoint_inset", cfg.endpoint_inset},
              {"panels_per_wavelength", cfg.panels_per_wavelength}};
  h.with_timestamp = with_timestamp;
  return h;
}

void write_header_block(std::ostream& os, const RunHeader& header) {
  os << "# lpfourier " << tool_version() << '\n';
  os << "# command: " << header.command << '\n';
  os << "# config: " << header.config.dump() << '\n';
  if (header.with_timestamp) os << "# timestamp: " << utc_timestamp() << '\n';
}

void write_envelope_csv(std::ostream& os, const RunHeader& header, const EnvelopeScan& scan) {
  write_header_block(os, header);
  os << "p,r,theta,scaled_value,err_estimate,method\n";
  for (const EnvelopeSample& s : scan.samples) {
    os << format_double(s.p) << ',' << format_double(s.r) << ',' << format_double(s.theta) << ','
       << format_double(s.scaled_value) << ',' << format_double(s.err_estimate) << ','
       << (s.failed ? std::string_view("failed") : to_string(s.method)) << '\n';
  }
}

void write_sequence_csv(std::ostream& os, const RunHeader& header,
                        std::span<const SequencePoint> points) {
  write_header_block(os, header);
  if (!points.empty()) os << "# v_of_p: " << format_double(points.front().v_of_p) << '\n';
  os << "n,r_n,scaled_value,v_of_p,err_estimate\n";
  for (const SequencePoint& s : points) {
    os << s.n << ',' << format_double(s.r_n) << ',' << format_double(s.scaled_value) << ','
       << format_double(s.v_of_p) << ',' << format_double(s.err_estimate) << '\n';
  }
}

nlohmann::json summary_base(const RunHeader& header) {
  nlohmann::json j = nlohmann::json::object();
  j["tool_version"] = std::string(tool_version());
  j["command"] = header.command;
  if (header.with_timestamp) j["timestamp"] = utc_timestamp();
  for (const auto& [key, value] : header.config.items()) j["config_" + key] = value;
  return j;
}

nlohmann::json envelope_summary(const RunHeader& header, const EnvelopeScan& scan,
                                const BoundCheck* check) {
  nlohmann::json j = summary_base(header);
  j["c_est"] = scan.c_est;
  j["sample_count"] = scan.samples.size();
  j["failed_count"] = scan.failed_count;
  std::size_t witnesses = 0;
  double witness_max = 0.0;
  for (const EnvelopeSample& s : scan.samples) {
    if (s.kind != SampleKind::grid && !s.failed) {
      ++witnesses;
      witness_max = std::max(witness_max, s.scaled_value);
    }
  }
  j["witness_count"] = witnesses;
  j["witness_max"] = witness_max;
  if (check != nullptr) {
    j["upper_bound"] = check->bound;
    j["upper_pass"] = check->pass;
    j["upper_slack"] = check->slack;
  }
  if (!scan.samples.empty()) {
    const double pv = scan.samples.front().p;
    if (pv > 1.0 && pv < 2.0) {
      const PExponent p(pv);
      j["theta_star"] = theta_star(p);
      j["v_of_p"] = stationary_asymptote(p);
      j["published_lower_reference"] = kPublishedLowerConstant / std::sqrt(pv - 1.0);
    }
  }
  return j;
}

nlohmann::json fit_summary(const RunHeader& header, const FitResult& quadrature_fit,
                           const FitResult& asymptote_fit) {
  nlohmann::json j = summary_base(header);
  j["slope"] = quadrature_fit.slope;
  j["intercept"] = quadrature_fit.intercept;
  j["max_abs_residual"] = quadrature_fit.max_abs_residual;
  j["asymptote_slope"] = asymptote_fit.slope;
  j["asymptote_intercept"] = asymptote_fit.intercept;
  j["slope_gap"] = std::abs(quadrature_fit.slope - asymptote_fit.slope);
  return j;
}

nlohmann::json conjecture_summary(const RunHeader& header, const ConjectureReport& report) {
  nlohmann::json j = summary_base(header);
  j["label"] = report.label;
  j["nu"] = report.nu;
  j["c_est"] = report.c_est;
  j["upper_bound"] = report.upper_bound;
  j["upper_ok"] = report.upper_ok;
  j["lower_reference"] = report.lower_reference;
  j["witness_theta"] = report.witness_theta;
  j["witness_max"] = report.witness_max;
  j["counterexample_candidate"] = report.counterexample_candidate;
  j["sample_count"] = report.sample_count;
  j["failed_count"] = report.failed_count;
  j["notes"] = report.notes;
  return j;
}

}  // namespace lpfourier
