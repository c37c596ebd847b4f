// Batch front-end over the nsvsi C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nsvsi.h"

namespace {

int run_verify(const std::string& config_path, const std::string& overrides) {
  std::ifstream f(config_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open config '" << config_path << "'\n";
    return 2;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string config = ss.str();

  nsvsi_report* rep = nullptr;
  nsvsi_status st = nsvsi_run_json(config.c_str(), overrides.c_str(), &rep);
  if (st == NSVSI_OK || st == NSVSI_CHECK_FAILED) {
    std::cout << nsvsi_report_text(rep);
  } else {
    std::cerr << "error: " << nsvsi_report_error(rep) << "\n";
  }
  nsvsi_report_free(rep);
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(nsvsi_version()) +
               " - verification toolkit for 4D neutral-signature VSI/CSI metrics"};
  app.require_subcommand(1);

  std::string config_path, report_path, mode;
  std::uint64_t seed = 0;
  int order = 0, points = 0;
  double tol = 0;
  bool has_seed = false;

  auto* verify = app.add_subcommand("verify", "run the checks described by a JSON config");
  verify->add_option("config", config_path, "path to the JSON config document")->required();
  verify->add_option("--seed", seed, "sample-point seed")->each([&](const std::string&) {
    has_seed = true;
  });
  verify->add_option("--mode", mode, "arithmetic mode: float | rational");
  verify->add_option("--order", order, "jet order (2..6)");
  verify->add_option("--points", points, "number of sample points");
  verify->add_option("--tol", tol, "default tolerance");
  verify->add_option("--report", report_path, "write the JSON report to this path");

  auto* list = app.add_subcommand("list-families", "print the family/preset catalog");
  std::string explain_id;
  auto* explain = app.add_subcommand("explain", "describe a check, system, transform or family");
  explain->add_option("id", explain_id, "identifier to describe")->required();

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    std::string overrides = "{";
    bool first = true;
    auto field = [&](const std::string& k, const std::string& v, bool quote) {
      if (!first) overrides += ",";
      overrides += "\"" + k + "\":" + (quote ? "\"" + v + "\"" : v);
      first = false;
    };
    if (has_seed) field("seed", std::to_string(seed), false);
    if (!mode.empty()) field("mode", mode, true);
    if (order) field("order", std::to_string(order), false);
    if (points) field("points", std::to_string(points), false);
    if (tol != 0) field("tol", std::to_string(tol), false);
    if (!report_path.empty()) field("report", report_path, true);
    overrides += "}";
    return run_verify(config_path, overrides == "{}" ? "" : overrides);
  }
  if (list->parsed()) {
    char* s = nsvsi_list_families();
    if (!s) return 4;
    std::cout << s;
    nsvsi_string_free(s);
    return 0;
  }
  if (explain->parsed()) {
    char* s = nsvsi_explain(explain_id.c_str());
    if (!s) {
      std::cerr << "error: unknown id '" << explain_id << "'\n";
      return 2;
    }
    std::cout << s << "\n";
    nsvsi_string_free(s);
    return 0;
  }
  return 0;
}
