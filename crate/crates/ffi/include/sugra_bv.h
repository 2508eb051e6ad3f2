#ifndef SUGRA_BV_H
#define SUGRA_BV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Report rendering.
 */
typedef enum SbvFormat {
  SBV_FORMAT_JSON = 0,
  SBV_FORMAT_TEXT = 1,
} SbvFormat;

/**
 * Status codes returned by every fallible call.
 */
typedef enum SbvStatus {
  SBV_STATUS_OK = 0,
  SBV_STATUS_NULL_POINTER = 1,
  SBV_STATUS_INVALID_UTF8 = 2,
  SBV_STATUS_INVALID_JSON = 3,
  SBV_STATUS_INVALID_CONFIG = 4,
  SBV_STATUS_INTERNAL = 5,
} SbvStatus;

/**
 * Opaque run report.
 */
typedef struct SbvReport SbvReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *sbv_last_error(void);

/**
 * Library version, statically allocated.
 */
const char *sbv_version(void);

/**
 * Runs the configuration given as JSON (missing keys take their defaults)
 * and stores a new report in `*out`.
 *
 * # Safety
 * `config_json` must be null or a NUL-terminated string; `out` must be null
 * or valid for writes.
 */
enum SbvStatus sbv_run_json(const char *config_json, struct SbvReport **out);

/**
 * Process exit code of the run: 0 when every check passed, 1 otherwise,
 * -1 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle from `sbv_run_json`.
 */
int32_t sbv_report_exit_code(const struct SbvReport *report);

/**
 * Number of checks in the report, 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle from `sbv_run_json`.
 */
size_t sbv_report_check_count(const struct SbvReport *report);

/**
 * Number of failing checks, 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle from `sbv_run_json`.
 */
size_t sbv_report_failure_count(const struct SbvReport *report);

/**
 * Renders the report; the string in `*out` is freed with `sbv_string_free`.
 *
 * # Safety
 * `report` must be null or a live handle; `out` must be null or valid for
 * writes.
 */
enum SbvStatus sbv_report_render(const struct SbvReport *report, enum SbvFormat format, char **out);

/**
 * # Safety
 * `report` must be null or a handle from `sbv_run_json` not yet freed.
 */
void sbv_report_free(struct SbvReport *report);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void sbv_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUGRA_BV_H */
