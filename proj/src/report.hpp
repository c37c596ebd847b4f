#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace nsvsi {

inline const char* tool_version() { return "nsvsi 0.1.0"; }

struct CheckResult {
  std::string id;
  bool pass = false;
  double max_residual = 0.0;
  std::vector<std::pair<std::string, double>> details;  // named values, stable order
  std::string note;
};

struct VerificationReport {
  std::string version = tool_version();
  std::string family;
  Mode mode = Mode::Float;
  int order = 3;
  std::uint64_t seed = 0;
  int points = 0;
  double tolerance = 0.0;
  std::vector<std::array<double, 4>> sample_points;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
  std::string to_json() const;
  std::string to_text() const;
};

// deterministic shortest-roundtrip-ish float formatting used by both renderers
std::string format_double(double v);

}  // namespace nsvsi
