/* C interface to the weil library. All strings are UTF-8. Strings returned
 * through `char** out` are owned by the caller and released with
 * weil_string_free. */
#ifndef WEIL_WEIL_H
#define WEIL_WEIL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(WEIL_BUILDING_LIBRARY)
#define WEIL_API __attribute__((visibility("default")))
#else
#define WEIL_API
#endif

typedef struct weil_session weil_session;

typedef enum weil_status {
  WEIL_OK = 0,
  WEIL_FAILURE = 1,  /* validation or identity failure; output holds the report */
  WEIL_ERROR = 2,    /* bad input: unknown name, unreadable file, parse error */
  WEIL_INTERNAL = 3  /* unexpected exception */
} weil_status;

typedef struct weil_options {
  const char* rep;     /* representation name; NULL means "adjoint" */
  int quantum;         /* 0 classical, 1 quantum */
  unsigned max_degree; /* truncation N for flat */
  int json;            /* 1 for JSON output */
  uint64_t seed;
} weil_options;

WEIL_API const char* weil_version(void);
WEIL_API weil_options weil_default_options(void);

/* Message for the last non-OK status on this thread ("" if none). */
WEIL_API const char* weil_last_error(void);
WEIL_API void weil_string_free(char* s);

/* Newline-separated builtin names. */
WEIL_API weil_status weil_builtin_names(char** out);

WEIL_API weil_status weil_open_builtin(const char* name, weil_session** out);
/* WEIL_FAILURE when the file loads but its structure constants are invalid;
 * weil_last_error() then holds the validation report. */
WEIL_API weil_status weil_open_file(const char* path, weil_session** out);
WEIL_API void weil_session_free(weil_session* s);

WEIL_API weil_status weil_validate(const weil_session* s, const weil_options* opt, char** out);
WEIL_API weil_status weil_check(const weil_session* s, const weil_options* opt, char** out);
WEIL_API weil_status weil_eval(const weil_session* s, const weil_options* opt,
                               const char* expression, char** out);
WEIL_API weil_status weil_flat(const weil_session* s, const weil_options* opt, char** out);
/* Check and flat over every builtin algebra; no session needed. */
WEIL_API weil_status weil_report(const weil_options* opt, char** out);

#ifdef __cplusplus
}
#endif

#endif
