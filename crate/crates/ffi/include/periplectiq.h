#ifndef PERIPLECTIQ_H
#define PERIPLECTIQ_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which report [`pq_report_new`] builds.
 */
typedef enum PqCommand {
  PQ_COMMAND_RELATIONS = 0,
  PQ_COMMAND_MAXIMAL = 1,
  PQ_COMMAND_DECOMPOSE = 2,
  PQ_COMMAND_CHARACTER = 3,
} PqCommand;

typedef enum PqOp {
  PQ_OP_ADD = 0,
  PQ_OP_SUB = 1,
  PQ_OP_MUL = 2,
  PQ_OP_DIV = 3,
} PqOp;

/**
 * Result code of every fallible call.
 */
typedef enum PqStatus {
  PQ_STATUS_OK = 0,
  PQ_STATUS_NULL_POINTER = 1,
  PQ_STATUS_INVALID_ARGUMENT = 2,
  PQ_STATUS_SHAPE_ERROR = 3,
  PQ_STATUS_SYMMETRIZER_DEGENERATE = 4,
  PQ_STATUS_PATTERN_ERROR = 5,
  PQ_STATUS_CERTIFICATE_FAILURE = 6,
  PQ_STATUS_PARSE_ERROR = 7,
  PQ_STATUS_DIVISION_BY_ZERO = 8,
  PQ_STATUS_POLE_AT_ONE = 9,
  PQ_STATUS_PANIC = 10,
} PqStatus;

/**
 * `V⊗k` with its generator actions.
 */
typedef struct PqModule PqModule;

/**
 * An element of `Q(q)`.
 */
typedef struct PqRatFunc PqRatFunc;

/**
 * A command report: JSON, text and a pass flag.
 */
typedef struct PqReport PqReport;

/**
 * Parameters for [`pq_report_new`]. `tableau` and `pattern` may be NULL.
 */
typedef struct PqOptions {
  uint32_t n;
  uint32_t k;
  bool mutate;
  const char *tableau;
  const char *pattern;
  /**
   * Read `σ_{r,s}` left to right instead of the default right to left.
   */
  bool left_to_right;
} PqOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; never NULL, never freed.
 */
const char *pq_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into the library from this thread.
 */
const char *pq_last_error(void);

/**
 * Frees a string returned by the library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void pq_string_free(char *s);

/**
 * Parses `q^2 + 1 + q^-2`, `(q - 1)/(q + 1)` and similar.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PqStatus pq_ratfunc_parse(const char *text, struct PqRatFunc **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed. NULL is ignored.
 */
void pq_ratfunc_free(struct PqRatFunc *r);

/**
 * Canonical text form; free with [`pq_string_free`].
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_ratfunc_to_string(const struct PqRatFunc *r, char **out);

/**
 * `*out = a op b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum PqStatus pq_ratfunc_binop(enum PqOp op,
                               const struct PqRatFunc *a,
                               const struct PqRatFunc *b,
                               struct PqRatFunc **out);

/**
 * Value at `q = 1` as a rational `num/den` string.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_ratfunc_eval_at_one(const struct PqRatFunc *r, char **out);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_ratfunc_is_zero(const struct PqRatFunc *r, bool *out);

/**
 * Builds `V⊗k` for `U_q(p_n)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PqStatus pq_module_new(uint32_t n, uint32_t k, struct PqModule **out);

/**
 * # Safety
 * `m` must come from this library and not have been freed. NULL is ignored.
 */
void pq_module_free(struct PqModule *m);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_module_dim(const struct PqModule *m, size_t *out);

/**
 * Weight multiplicities as JSON `[{"weight": [...], "multiplicity": m}, ...]`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_module_character_json(const struct PqModule *m, char **out);

/**
 * Runs one command, as the CLI would, and keeps its report.
 *
 * A report whose checks fail is still returned with status `Ok`; query
 * [`pq_report_ok`].
 *
 * # Safety
 * `opts` must point to a valid [`PqOptions`] whose string fields are NULL or
 * NUL-terminated; `out` must be writable.
 */
enum PqStatus pq_report_new(enum PqCommand command,
                            const struct PqOptions *opts,
                            struct PqReport **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed. NULL is ignored.
 */
void pq_report_free(struct PqReport *r);

/**
 * Whether every check in the report passed.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_report_ok(const struct PqReport *r, bool *out);

/**
 * Pretty-printed JSON, identical to `--format json` output.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_report_json(const struct PqReport *r, char **out);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum PqStatus pq_report_text(const struct PqReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERIPLECTIQ_H */
