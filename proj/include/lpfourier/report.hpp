#ifndef LPFOURIER_REPORT_HPP
#define LPFOURIER_REPORT_HPP

// Machine-readable output: CSV sample streams and flat JSON summaries.
//
// Every file starts with a header block of '#' lines carrying the tool version,
// the serialised run configuration and (unless disabled) a timestamp. JSON
// summaries carry the same information as top-level keys.

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "lpfourier/convex_probe.hpp"
#include "lpfourier/decay.hpp"

namespace lpfourier {

std::string_view tool_version();

/// Shortest decimal string that parses back to the same double ("nan", "inf", "-inf" otherwise).
std::string format_double(double v);

struct RunHeader {
  std::string command;
  /// Flat object of the run's parameters.
  nlohmann::json config = nlohmann::json::object();
  bool with_timestamp = true;
};

/// Header for an envelope run; the CLI and the acceptance suite share it so their CSVs agree.
RunHeader envelope_header(double p, double r_min, double r_max, int per_decade, int theta_count,
                          const QuadConfig& cfg, bool with_timestamp);

void write_header_block(std::ostream& os, const RunHeader& header);

/// Columns: p,r,theta,scaled_value,err_estimate,method
void write_envelope_csv(std::ostream& os, const RunHeader& header, const EnvelopeScan& scan);

/// Columns: n,r_n,scaled_value,v_of_p,err_estimate
void write_sequence_csv(std::ostream& os, const RunHeader& header,
                        std::span<const SequencePoint> points);

/// Flat JSON object with tool_version, command, config_* keys and optional timestamp.
nlohmann::json summary_base(const RunHeader& header);

nlohmann::json envelope_summary(const RunHeader& header, const EnvelopeScan& scan,
                                const BoundCheck* check);
nlohmann::json fit_summary(const RunHeader& header, const FitResult& quadrature_fit,
                           const FitResult& asymptote_fit);
nlohmann::json conjecture_summary(const RunHeader& header, const ConjectureReport& report);

}  // namespace lpfourier

#endif  // LPFOURIER_REPORT_HPP
