#ifndef LINESYM_H
#define LINESYM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum LsStatus {
  LS_STATUS_OK = 0,
  LS_STATUS_NULL_ARGUMENT = 1,
  LS_STATUS_INVALID_UTF8 = 2,
  LS_STATUS_PARSE = 3,
  LS_STATUS_WITNESS = 4,
  LS_STATUS_UNKNOWN_CASE = 5,
  LS_STATUS_RENDER = 6,
  LS_STATUS_OUT_OF_RANGE = 7,
  LS_STATUS_PANIC = 8,
} LsStatus;

// Pipeline outcome of a case.
typedef enum LsOutcome {
  LS_OUTCOME_SUCCESS = 0,
  LS_OUTCOME_FAILURE = 1,
  LS_OUTCOME_INAPPLICABLE = 2,
} LsOutcome;

// A parsed arrangement.
typedef struct LsArrangement LsArrangement;

// The result of the symmetry search on one shipped case.
typedef struct LsReport LsReport;

// A parsed configuration table.
typedef struct LsTable LsTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the next call.
const char *ls_last_error_message(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a string produced by this library and not yet freed.
void ls_string_free(char *s);

// Parses a configuration table in `.cfg` format.
//
// # Safety
// `source` must be a NUL-terminated string; `out` must be writable.
enum LsStatus ls_table_parse(const char *source, struct LsTable **out);

// # Safety
// `t` must be null or a live table handle.
void ls_table_free(struct LsTable *t);

// Number of lines of the table.
//
// # Safety
// `t` must be a live table handle; `out` must be writable.
enum LsStatus ls_table_line_count(const struct LsTable *t, size_t *out);

// Order of the lattice automorphism group of the table.
//
// # Safety
// `t` must be a live table handle; `out` must be writable.
enum LsStatus ls_table_aut_order(const struct LsTable *t, size_t *out);

// Parses an arrangement in `.arr` format.
//
// # Safety
// `source` must be a NUL-terminated string; `out` must be writable.
enum LsStatus ls_arrangement_parse(const char *source, struct LsArrangement **out);

// # Safety
// `a` must be null or a live arrangement handle.
void ls_arrangement_free(struct LsArrangement *a);

// Number of lines of the arrangement.
//
// # Safety
// `a` must be a live arrangement handle; `out` must be writable.
enum LsStatus ls_arrangement_line_count(const struct LsArrangement *a, size_t *out);

// Checks that swapping x and y (then conjugating, if `conjugate`) sends line `i` of `plus`
// to line `σ(i)` of `minus` for every `i`. `sigma` is in cycle notation.
//
// # Safety
// Handles must be live, `sigma` NUL-terminated and `verified` writable.
enum LsStatus ls_verify_reflection(const struct LsArrangement *plus,
                                   const struct LsArrangement *minus,
                                   const char *sigma,
                                   bool conjugate,
                                   bool *verified);

// Renders the real affine part as SVG. `infinity` is the 1-based line sent to infinity,
// or 0 to keep `z = 0` at infinity.
//
// # Safety
// `a` must be a live arrangement handle; `out` must be writable.
enum LsStatus ls_render_svg(const struct LsArrangement *a, size_t infinity, char **out);

// Number of shipped cases.
size_t ls_case_count(void);

// Name of shipped case `index` (0-based), as a caller-owned string.
//
// # Safety
// `out` must be writable.
enum LsStatus ls_case_name(size_t index, char **out);

// Runs the symmetry search on a shipped case.
//
// # Safety
// `case_name` must be NUL-terminated; `out` must be writable.
enum LsStatus ls_pipeline_run(const char *case_name, struct LsReport **out);

// # Safety
// `r` must be null or a live report handle.
void ls_report_free(struct LsReport *r);

// # Safety
// `r` must be a live report handle; `out` must be writable.
enum LsStatus ls_report_outcome(const struct LsReport *r, enum LsOutcome *out);

// # Safety
// `r` must be a live report handle; `out` must be writable.
enum LsStatus ls_report_aut_order(const struct LsReport *r, size_t *out);

// The whole report as JSON, as a caller-owned string.
//
// # Safety
// `r` must be a live report handle; `out` must be writable.
enum LsStatus ls_report_json(const struct LsReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LINESYM_H */
