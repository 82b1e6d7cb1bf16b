#ifndef SATOGR_SATOGR_H
#define SATOGR_SATOGR_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(SATOGR_BUILDING)
#    define SATOGR_API __declspec(dllexport)
#  else
#    define SATOGR_API __declspec(dllimport)
#  endif
#else
#  define SATOGR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum satogr_status {
  SATOGR_OK = 0,
  /* verify ran and at least one property failed */
  SATOGR_FAILED = 1,
  SATOGR_ERR_PARSE = 2,
  SATOGR_ERR_PRECONDITION = 3,
  SATOGR_ERR_PRECISION = 4,
  SATOGR_ERR_INTERNAL = 5,
  /* null handle, unknown option, out-of-range value */
  SATOGR_ERR_ARGUMENT = 6
} satogr_status;

typedef enum satogr_precision {
  SATOGR_DEG = 0,
  SATOGR_TAIL_DEPTH = 1,
  SATOGR_WINDOW = 2,
  SATOGR_PAIR_WINDOW = 3
} satogr_precision;

/* Job settings: base field, precision flags, seed and scale. Not thread safe; use one per thread. */
typedef struct satogr_context satogr_context;
/* Output document of one job. */
typedef struct satogr_result satogr_result;

SATOGR_API const char* satogr_version(void);
SATOGR_API const char* satogr_status_name(satogr_status status);

SATOGR_API satogr_status satogr_context_new(satogr_context** out);
SATOGR_API void satogr_context_free(satogr_context* ctx);
/* Message of the last failing call on ctx, or "" */
SATOGR_API const char* satogr_context_last_error(const satogr_context* ctx);

/* "q" or "fp:<p>"; checked when set */
SATOGR_API satogr_status satogr_context_set_field(satogr_context* ctx, const char* spec);
SATOGR_API satogr_status satogr_context_set_precision(satogr_context* ctx, satogr_precision which, int64_t value);
SATOGR_API satogr_status satogr_context_clear_precision(satogr_context* ctx, satogr_precision which);
SATOGR_API satogr_status satogr_context_set_seed(satogr_context* ctx, uint64_t seed);
/* "small" or "full" */
SATOGR_API satogr_status satogr_context_set_scale(satogr_context* ctx, const char* scale);

/* NUL-terminated command names, ending with NULL. */
SATOGR_API const char* const* satogr_commands(void);

/*
 * Runs a command on a JSON payload (NULL or "" for none). On any status other than
 * SATOGR_ERR_ARGUMENT *out receives a result, which holds the error document on failure.
 */
SATOGR_API satogr_status satogr_run(satogr_context* ctx, const char* command, const char* payload,
                                    satogr_result** out);

SATOGR_API satogr_status satogr_result_status(const satogr_result* result);
/* JSON text owned by the result */
SATOGR_API const char* satogr_result_document(const satogr_result* result);
SATOGR_API void satogr_result_free(satogr_result* result);

#ifdef __cplusplus
}
#endif

#endif
