#pragma once

#include "config.hpp"
#include "geometry.hpp"
#include "report.hpp"

namespace nsvsi {

// build the metric instance a config describes (exposed for tests)
MetricInstance build_instance(const VerificationConfig& cfg);

// run all configured checks; writes the report file when cfg.report_path set
VerificationReport run(const VerificationConfig& cfg);

std::string list_families_json();

// documentation text for a check/system/transform/family id; Error(Config) if unknown
std::string explain(const std::string& id);

// deterministic sample-point stream (exposed for tests)
struct SampleStream {
  std::uint64_t state;
  explicit SampleStream(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64();
  double next_unit();                         // in [0,1)
  std::pair<long long, long long> next_ratio(double lo, double hi);  // bounded denominator
};

}  // namespace nsvsi
