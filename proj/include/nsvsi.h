/* nsvsi: verification toolkit for 4D neutral-signature VSI/CSI metrics.
 *
 * C API over the core library. All functions are thread-compatible: distinct
 * report handles may be used from distinct threads; a single handle is not
 * internally synchronized.
 */
#ifndef NSVSI_H
#define NSVSI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nsvsi_status {
  NSVSI_OK = 0,           /* every configured check passed */
  NSVSI_CHECK_FAILED = 1, /* verification ran; at least one check failed */
  NSVSI_CONFIG_ERROR = 2, /* config document invalid (message in report error) */
  NSVSI_EVAL_ERROR = 3,   /* evaluation failed (singular point, domain error, ...) */
  NSVSI_INTERNAL_ERROR = 4
} nsvsi_status;

typedef struct nsvsi_report nsvsi_report;

const char* nsvsi_version(void);

/* Run a verification described by a JSON config document.
 *
 * overrides_json may be NULL, or a JSON object with any of:
 *   seed (integer), mode ("float"|"rational"), order, points, tol, report (path).
 * On return *out is a report handle (never NULL), to be freed with
 * nsvsi_report_free. The returned status matches the CLI exit-code contract. */
nsvsi_status nsvsi_run_json(const char* config_json, const char* overrides_json,
                            nsvsi_report** out);

/* Renderings owned by the handle; valid until nsvsi_report_free. */
const char* nsvsi_report_json(const nsvsi_report* r);
const char* nsvsi_report_text(const nsvsi_report* r);
nsvsi_status nsvsi_report_status(const nsvsi_report* r);
/* Error message for CONFIG/EVAL/INTERNAL failures, "" otherwise. */
const char* nsvsi_report_error(const nsvsi_report* r);
void nsvsi_report_free(nsvsi_report* r);

/* Family/preset catalog as a JSON array; free with nsvsi_string_free. */
char* nsvsi_list_families(void);

/* Documentation for a check/system/transform/family id; NULL when unknown;
 * free with nsvsi_string_free. */
char* nsvsi_explain(const char* id);

void nsvsi_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NSVSI_H */
