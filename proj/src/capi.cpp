#include "nsvsi.h"

#include <cstring>
#include <new>
#include <string>

#include "config.hpp"
#include "report.hpp"
#include "runner.hpp"

struct nsvsi_report {
  nsvsi_status status = NSVSI_INTERNAL_ERROR;
  std::string json;
  std::string text;
  std::string error;
};

extern "C" {

const char* nsvsi_version(void) { return nsvsi::tool_version(); }

nsvsi_status nsvsi_run_json(const char* config_json, const char* overrides_json,
                            nsvsi_report** out) {
  if (!out) return NSVSI_INTERNAL_ERROR;
  auto* rep = new (std::nothrow) nsvsi_report;
  if (!rep) return NSVSI_INTERNAL_ERROR;
  *out = rep;
  try {
    if (!config_json) nsvsi::fail(nsvsi::ErrorKind::Config, "config document is null");
    nsvsi::VerificationConfig cfg = nsvsi::parse_config(config_json);
    if (overrides_json && *overrides_json) nsvsi::apply_overrides(cfg, overrides_json);
    nsvsi::VerificationReport r = nsvsi::run(cfg);
    rep->json = r.to_json();
    rep->text = r.to_text();
    rep->status = r.all_pass() ? NSVSI_OK : NSVSI_CHECK_FAILED;
  } catch (const nsvsi::Error& e) {
    rep->error = e.what();
    rep->status = e.exit_code() == 2 ? NSVSI_CONFIG_ERROR : NSVSI_EVAL_ERROR;
  } catch (const std::exception& e) {
    rep->error = e.what();
    rep->status = NSVSI_INTERNAL_ERROR;
  }
  return rep->status;
}

const char* nsvsi_report_json(const nsvsi_report* r) { return r ? r->json.c_str() : nullptr; }
const char* nsvsi_report_text(const nsvsi_report* r) { return r ? r->text.c_str() : nullptr; }
nsvsi_status nsvsi_report_status(const nsvsi_report* r) {
  return r ? r->status : NSVSI_INTERNAL_ERROR;
}
const char* nsvsi_report_error(const nsvsi_report* r) { return r ? r->error.c_str() : nullptr; }
void nsvsi_report_free(nsvsi_report* r) { delete r; }

static char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* nsvsi_list_families(void) {
  try {
    return dup_string(nsvsi::list_families_json());
  } catch (...) {
    return nullptr;
  }
}

char* nsvsi_explain(const char* id) {
  if (!id) return nullptr;
  try {
    return dup_string(nsvsi::explain(id));
  } catch (...) {
    return nullptr;
  }
}

void nsvsi_string_free(char* s) { std::free(s); }

}  // extern "C"
