#include "report.hpp"

#include <cstdio>

#include <json.hpp>

namespace nsvsi {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = version;
  j["family"] = family;
  j["mode"] = mode_name(mode);
  j["order"] = order;
  j["seed"] = seed;
  j["points"] = points;
  j["tolerance"] = format_double(tolerance);
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : sample_points) {
    nlohmann::ordered_json q = nlohmann::ordered_json::array();
    for (double x : p) q.push_back(format_double(x));
    pts.push_back(q);
  }
  j["sample_points"] = pts;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["pass"] = c.pass;
    cj["max_residual"] = format_double(c.max_residual);
    if (!c.details.empty()) {
      nlohmann::ordered_json dj = nlohmann::ordered_json::object();
      for (const auto& [k, v] : c.details) dj[k] = format_double(v);
      cj["values"] = dj;
    }
    if (!c.note.empty()) cj["note"] = c.note;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  j["all_pass"] = all_pass();
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::string out;
  out += version;
  out += "  family=" + family + "  mode=" + mode_name(mode) +
         "  order=" + std::to_string(order) + "  seed=" + std::to_string(seed) +
         "  points=" + std::to_string(points) + "\n";
  std::size_t idw = 8;
  for (const auto& c : checks) idw = std::max(idw, c.id.size());
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-6s  %-22s  %s\n", static_cast<int>(idw), "check",
                "result", "max-residual", "notes");
  out += line;
  for (const auto& c : checks) {
    std::string notes = c.note;
    for (const auto& [k, v] : c.details) {
      if (!notes.empty()) notes += "  ";
      notes += k + "=" + format_double(v);
    }
    std::snprintf(line, sizeof line, "%-*s  %-6s  %-22s  %s\n", static_cast<int>(idw),
                  c.id.c_str(), c.pass ? "pass" : "FAIL",
                  format_double(c.max_residual).c_str(), notes.c_str());
    out += line;
  }
  out += all_pass() ? "overall: pass\n" : "overall: FAIL\n";
  return out;
}

}  // namespace nsvsi
