#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace nsvsi {

struct FunctionDecl {
  std::string name;
  std::vector<std::string> args;
  std::string body;
};

struct AntiderivativeDecl {
  std::string function;
  std::string wrt;
  std::string antiderivative;
};

struct TransformDecl {
  std::string kind;  // null-shift | null-rescale | st-shift | st-rescale | csi2-shift
  std::string h;     // generator source (shift kinds)
  std::string g;     // generator source (rescale kinds)
  std::string g_inverse;
};

struct SampleSpec {
  std::map<std::string, std::pair<double, double>> box;  // per-coordinate ranges
  int count = 8;
  std::uint64_t seed = 1;
};

struct VerificationConfig {
  std::string family;  // family or preset id
  std::map<std::string, std::string> components;       // slot name -> DSL source
  std::map<std::string, std::string> roles;            // constructor function wiring
  std::map<std::string, std::pair<long long, long long>> params;
  std::vector<FunctionDecl> functions;
  std::vector<AntiderivativeDecl> antiderivatives;
  std::vector<std::string> checks;
  std::vector<TransformDecl> transforms;
  SampleSpec sample;
  int order = 3;
  Mode mode = Mode::Float;
  double tolerance = 1e-9;
  std::map<std::string, double> check_tolerances;  // per-check override
  std::string report_path;
};

// parse / validate a JSON config document; Error(Config) names the field path
VerificationConfig parse_config(const std::string& json_text);

// overrides document: {"seed":..,"mode":"float|rational","order":..,
//                      "points":..,"tol":..,"report":".."}
void apply_overrides(VerificationConfig& cfg, const std::string& overrides_json);

}  // namespace nsvsi
