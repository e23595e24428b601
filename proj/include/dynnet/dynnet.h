/* dynnet — time-varying frequency-band network connectedness.
 *
 * C89-compatible interface to the estimation library. All functions are
 * thread-compatible; the error message buffer is thread-local. Functions
 * returning dynnet_status set the thread-local message retrievable through
 * dynnet_last_error() on any nonzero status.
 */
#ifndef DYNNET_H
#define DYNNET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DYNNET_API __declspec(dllexport)
#else
#define DYNNET_API __attribute__((visibility("default")))
#endif

typedef enum dynnet_status {
  DYNNET_OK = 0,
  DYNNET_CONFIG_ERROR = 2,
  DYNNET_DATA_ERROR = 3,
  DYNNET_NUMERIC_ERROR = 4,
  DYNNET_INTERNAL_ERROR = 5
} dynnet_status;

/* Opaque observation panel: T rows, N series, string time labels. */
typedef struct dynnet_panel dynnet_panel;

/* Library semantic version, static storage. */
DYNNET_API const char* dynnet_version(void);

/* Message for the most recent failure on this thread; static storage,
 * overwritten by the next failing call. Never NULL. */
DYNNET_API const char* dynnet_last_error(void);

/* Frees strings returned through char** out-parameters. */
DYNNET_API void dynnet_string_free(char* s);

/* Loads a panel from CSV (header "time,<name1>,...", one row per time). */
DYNNET_API dynnet_status dynnet_panel_load(const char* path, dynnet_panel** out);

/* Builds a panel from a dense row-major values buffer (rows x cols).
 * time_labels/series_names may be NULL for 1-based defaults. */
DYNNET_API dynnet_status dynnet_panel_create(const double* values, int64_t rows,
                                             int64_t cols,
                                             const char* const* time_labels,
                                             const char* const* series_names,
                                             dynnet_panel** out);

DYNNET_API int64_t dynnet_panel_rows(const dynnet_panel* panel);
DYNNET_API int64_t dynnet_panel_cols(const dynnet_panel* panel);

/* In-place realized-variance annualization: x -> 100*sqrt(252*x). */
DYNNET_API dynnet_status dynnet_panel_annualize(dynnet_panel* panel);

DYNNET_API dynnet_status dynnet_panel_write(const dynnet_panel* panel, const char* path);

DYNNET_API void dynnet_panel_free(dynnet_panel* panel);

/* Runs a full job described by a flat JSON config (same keys as the CLI
 * flags: mode, input, dgp, sims, lags, truncation, bandwidth, draws,
 * shrinkage, bands, seed, workers, times, ...). Artifacts are written under
 * out_dir. When summary_json is non-NULL it receives a malloc'd JSON string
 * (release with dynnet_string_free). */
DYNNET_API dynnet_status dynnet_job_run(const char* job_json, const char* out_dir,
                                        char** summary_json);

/* Estimates connectedness at one focal time (1-based) on a loaded panel.
 * run_json carries RunConfig keys (lags, truncation, bandwidth, draws,
 * shrinkage, bands, seed, ...); result_json receives the per-band measures
 * and band-pair tests (release with dynnet_string_free). */
DYNNET_API dynnet_status dynnet_estimate_point(const dynnet_panel* panel,
                                               const char* run_json, int focal_time,
                                               char** result_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DYNNET_H */
