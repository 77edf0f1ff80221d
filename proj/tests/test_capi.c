/* Exercises the shared library through weil.h only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "weil/weil.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* data_path(const char* name, char* buf, size_t n) {
  snprintf(buf, n, "%s/%s", WEIL_TEST_DATA_DIR, name);
  return buf;
}

int main(void) {
  char* out = NULL;
  char path[1024];
  weil_session* s = NULL;
  weil_options opt = weil_default_options();

  EXPECT(strlen(weil_version()) > 0);
  EXPECT(opt.max_degree == 2 && opt.seed == 1 && opt.quantum == 0);

  EXPECT(weil_builtin_names(&out) == WEIL_OK);
  EXPECT(out && strstr(out, "so3") && strstr(out, "heisenberg3"));
  weil_string_free(out);

  EXPECT(weil_open_builtin("e8", &s) == WEIL_ERROR);
  EXPECT(s == NULL);
  EXPECT(strstr(weil_last_error(), "e8") != NULL);
  EXPECT(weil_open_builtin(NULL, &s) == WEIL_ERROR);

  EXPECT(weil_open_builtin("so3", &s) == WEIL_OK);
  EXPECT(s != NULL);

  out = NULL;
  EXPECT(weil_validate(s, &opt, &out) == WEIL_OK);
  weil_string_free(out);

  opt.rep = "adjoint";
  out = NULL;
  EXPECT(weil_check(s, &opt, &out) == WEIL_OK);
  weil_string_free(out);

  out = NULL;
  EXPECT(weil_eval(s, &opt, "d(y1)", &out) == WEIL_OK);
  EXPECT(out && strcmp(out, "v1 - y2*y3\n") == 0);
  weil_string_free(out);

  out = NULL;
  EXPECT(weil_eval(s, &opt, "d(y1", &out) == WEIL_ERROR);
  EXPECT(strstr(weil_last_error(), "1:5") != NULL || strstr(weil_last_error(), "column 5") != NULL);
  weil_string_free(out);

  opt.quantum = 1;
  opt.rep = "trivial";
  out = NULL;
  EXPECT(weil_eval(s, &opt, "gamma*gamma", &out) == WEIL_OK);
  EXPECT(out && strcmp(out, "-1/8\n") == 0);
  weil_string_free(out);

  opt.rep = "nope";
  out = NULL;
  EXPECT(weil_check(s, &opt, &out) == WEIL_ERROR);
  weil_string_free(out);
  weil_session_free(s);

  s = NULL;
  EXPECT(weil_open_file(data_path("so3_corrupted.json", path, sizeof path), &s) == WEIL_FAILURE);
  EXPECT(s == NULL);
  EXPECT(strstr(weil_last_error(), "(1,2,3)") != NULL);

  EXPECT(weil_open_file(data_path("does_not_exist.json", path, sizeof path), &s) == WEIL_ERROR);

  EXPECT(weil_open_file(data_path("so3_form_broken.json", path, sizeof path), &s) == WEIL_OK);
  opt = weil_default_options();
  out = NULL;
  EXPECT(weil_validate(s, &opt, &out) == WEIL_FAILURE);
  EXPECT(out && strstr(out, "(1,2,3)") != NULL);
  weil_string_free(out);
  weil_session_free(s);

  weil_session_free(NULL);
  weil_string_free(NULL);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("C API: all checks passed\n");
  return failures ? 1 : 0;
}
