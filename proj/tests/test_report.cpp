#include <charconv>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "lpfourier/report.hpp"

using namespace lpfourier;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("shortest round-trip doubles") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-1e-10) == "-1e-10");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(-INFINITY) == "-inf");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(u(rng), static_cast<int>(u(rng)));
    const std::string s = format_double(v);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(std::memcmp(&v, &back, sizeof v) == 0);
  }
}

TEST_CASE("envelope CSV layout") {
  EnvelopeScan scan;
  scan.samples.push_back({1.5, 5, 0.785, 0.25, 1e-12, TransformMethod::reduction_x, SampleKind::grid, false, ""});
  scan.samples.push_back({1.5, 7, 1.0, std::nan(""), 0, TransformMethod::reduction_x, SampleKind::witness, true, "budget"});
  RunHeader h;
  h.command = "envelope";
  h.config = {{"p", 1.5}};
  h.with_timestamp = false;
  std::ostringstream os;
  write_envelope_csv(os, h, scan);
  const auto l = lines(os.str());
  REQUIRE(l.size() == 6);
  CHECK(l[0] == "# lpfourier " + std::string(tool_version()));
  CHECK(l[1] == "# command: envelope");
  CHECK(l[2] == "# config: {\"p\":1.5}");
  CHECK(l[3] == "p,r,theta,scaled_value,err_estimate,method");
  CHECK(l[4] == "1.5,5,0.785,0.25,1e-12,reduction-x");
  CHECK(l[5] == "1.5,7,1,nan,0,failed");

  h.with_timestamp = true;
  std::ostringstream ts;
  write_header_block(ts, h);
  const auto tl = lines(ts.str());
  REQUIRE(tl.size() == 4);
  CHECK(tl[3].rfind("# timestamp: ", 0) == 0);
}

TEST_CASE("sequence CSV layout") {
  const std::vector<SequencePoint> pts = {{25, 172.3, 0.68, 0.675, 1e-11}};
  RunHeader h;
  h.command = "sequence";
  h.with_timestamp = false;
  std::ostringstream os;
  write_sequence_csv(os, h, pts);
  const auto l = lines(os.str());
  REQUIRE(l.size() == 6);
  CHECK(l[3] == "# v_of_p: 0.675");
  CHECK(l[4] == "n,r_n,scaled_value,v_of_p,err_estimate");
  CHECK(l[5] == "25,172.3,0.68,0.675,1e-11");
}

TEST_CASE("flat JSON summaries") {
  const RunHeader h = envelope_header(1.5, 5, 2000, 64, 48, QuadConfig{}, false);
  EnvelopeScan scan;
  scan.c_est = 1.2;
  scan.samples.push_back({1.5, 5, 1.0, 1.2, 0, TransformMethod::reduction_x, SampleKind::witness, false, ""});
  const BoundCheck check = upper_bound_check(PExponent(1.5), scan.c_est);
  const nlohmann::json j = envelope_summary(h, scan, &check);
  CHECK(j.at("command") == "envelope");
  CHECK(j.at("config_p") == 1.5);
  CHECK(j.at("config_per_decade") == 64);
  CHECK(j.at("c_est").is_number());
  CHECK(j.at("upper_pass") == true);
  CHECK(j.at("witness_count") == 1);
  CHECK_FALSE(j.contains("timestamp"));
  for (const auto& [k, v] : j.items()) {
    CHECK_FALSE(v.is_object());
    CHECK(k.find_first_of("ABCDEFGHIJKLMNOPQRSTUVWXYZ-") == std::string::npos);
  }
}
