#include "config.hpp"

#include <json.hpp>

namespace nsvsi {

namespace {

using nlohmann::json;

[[noreturn]] void cfail(const std::string& path, const std::string& msg) {
  fail(ErrorKind::Config, "config." + path + ": " + msg);
}

// numbers in configs become exact ratios: integers directly, decimals by
// scaling, strings parsed as "p/q" or decimal
std::pair<long long, long long> exact_number(const json& v, const std::string& path) {
  if (v.is_number_integer()) return {v.get<long long>(), 1};
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash != std::string::npos)
        return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
      auto dot = s.find('.');
      if (dot == std::string::npos) return {std::stoll(s), 1};
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      long long den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      return {std::stoll(digits), den};
    } catch (const std::exception&) {
      cfail(path, "cannot parse exact number '" + s + "'");
    }
  }
  if (v.is_number_float()) {
    // accept only numbers that are short decimals to keep exactness honest
    double d = v.get<double>();
    long long den = 1;
    for (int k = 0; k < 9; ++k) {
      double scaled = d * static_cast<double>(den);
      long long n = static_cast<long long>(std::llround(scaled));
      if (std::fabs(scaled - static_cast<double>(n)) < 1e-12) return {n, den};
      den *= 10;
    }
    cfail(path, "float value is not a short decimal; write it as a string \"p/q\"");
  }
  cfail(path, "expected a number");
}

}  // namespace

VerificationConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::Config, std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::Config, "config: top level must be an object");
  VerificationConfig cfg;
  if (!j.contains("family") || !j["family"].is_string())
    cfail("family", "required string");
  cfg.family = j["family"].get<std::string>();

  if (j.contains("components")) {
    if (!j["components"].is_object()) cfail("components", "must be an object");
    for (auto& [k, v] : j["components"].items()) {
      if (!v.is_string()) cfail("components." + k, "must be a string expression");
      cfg.components[k] = v.get<std::string>();
    }
  }
  if (j.contains("roles")) {
    if (!j["roles"].is_object()) cfail("roles", "must be an object");
    for (auto& [k, v] : j["roles"].items()) cfg.roles[k] = v.get<std::string>();
  }
  if (j.contains("parameters")) {
    if (!j["parameters"].is_object()) cfail("parameters", "must be an object");
    for (auto& [k, v] : j["parameters"].items())
      cfg.params[k] = exact_number(v, "parameters." + k);
  }
  if (j.contains("functions")) {
    if (!j["functions"].is_array()) cfail("functions", "must be an array");
    for (std::size_t i = 0; i < j["functions"].size(); ++i) {
      const auto& f = j["functions"][i];
      const std::string p = "functions[" + std::to_string(i) + "]";
      if (!f.contains("name") || !f.contains("args") || !f.contains("body"))
        cfail(p, "needs name, args, body");
      FunctionDecl d;
      d.name = f["name"].get<std::string>();
      for (const auto& a : f["args"]) d.args.push_back(a.get<std::string>());
      d.body = f["body"].get<std::string>();
      cfg.functions.push_back(std::move(d));
    }
  }
  if (j.contains("antiderivatives")) {
    if (!j["antiderivatives"].is_array()) cfail("antiderivatives", "must be an array");
    for (std::size_t i = 0; i < j["antiderivatives"].size(); ++i) {
      const auto& a = j["antiderivatives"][i];
      const std::string p = "antiderivatives[" + std::to_string(i) + "]";
      if (!a.contains("function") || !a.contains("wrt") || !a.contains("antiderivative"))
        cfail(p, "needs function, wrt, antiderivative");
      cfg.antiderivatives.push_back(
          {a["function"].get<std::string>(), a["wrt"].get<std::string>(),
           a["antiderivative"].get<std::string>()});
    }
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) cfail("checks", "must be an array");
    for (const auto& c : j["checks"]) cfg.checks.push_back(c.get<std::string>());
  }
  if (j.contains("transforms")) {
    if (!j["transforms"].is_array()) cfail("transforms", "must be an array");
    for (std::size_t i = 0; i < j["transforms"].size(); ++i) {
      const auto& t = j["transforms"][i];
      TransformDecl d;
      if (!t.contains("kind")) cfail("transforms[" + std::to_string(i) + "]", "needs kind");
      d.kind = t["kind"].get<std::string>();
      if (t.contains("h")) d.h = t["h"].get<std::string>();
      if (t.contains("g")) d.g = t["g"].get<std::string>();
      if (t.contains("g_inverse")) d.g_inverse = t["g_inverse"].get<std::string>();
      cfg.transforms.push_back(std::move(d));
    }
  }
  if (j.contains("sample")) {
    const auto& s = j["sample"];
    if (s.contains("box")) {
      for (auto& [k, v] : s["box"].items()) {
        if (!v.is_array() || v.size() != 2) cfail("sample.box." + k, "expected [lo, hi]");
        cfg.sample.box[k] = {v[0].get<double>(), v[1].get<double>()};
      }
    }
    if (s.contains("count")) cfg.sample.count = s["count"].get<int>();
    if (s.contains("seed")) cfg.sample.seed = s["seed"].get<std::uint64_t>();
    if (cfg.sample.count < 1) cfail("sample.count", "must be >= 1");
  }
  if (j.contains("order")) cfg.order = j["order"].get<int>();
  if (cfg.order < 2 || cfg.order > 6) cfail("order", "must be in [2, 6]");
  if (j.contains("mode")) {
    std::string m = j["mode"].get<std::string>();
    if (m == "float")
      cfg.mode = Mode::Float;
    else if (m == "rational")
      cfg.mode = Mode::Rational;
    else
      cfail("mode", "must be \"float\" or \"rational\"");
  }
  if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
  if (j.contains("check_tolerances")) {
    for (auto& [k, v] : j["check_tolerances"].items())
      cfg.check_tolerances[k] = v.get<double>();
  }
  if (j.contains("report")) cfg.report_path = j["report"].get<std::string>();
  return cfg;
}

void apply_overrides(VerificationConfig& cfg, const std::string& text) {
  if (text.empty()) return;
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::Config, std::string("overrides: invalid JSON: ") + e.what());
  }
  if (j.contains("seed")) cfg.sample.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("points")) cfg.sample.count = j["points"].get<int>();
  if (j.contains("order")) cfg.order = j["order"].get<int>();
  if (j.contains("tol")) cfg.tolerance = j["tol"].get<double>();
  if (j.contains("report")) cfg.report_path = j["report"].get<std::string>();
  if (j.contains("mode")) {
    std::string m = j["mode"].get<std::string>();
    if (m == "float")
      cfg.mode = Mode::Float;
    else if (m == "rational")
      cfg.mode = Mode::Rational;
    else
      fail(ErrorKind::Config, "overrides.mode: must be \"float\" or \"rational\"");
  }
  if (cfg.order < 2 || cfg.order > 6) fail(ErrorKind::Config, "overrides.order: out of range");
  if (cfg.sample.count < 1) fail(ErrorKind::Config, "overrides.points: must be >= 1");
}

}  // namespace nsvsi
