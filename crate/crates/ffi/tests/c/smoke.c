#include <stdio.h>
#include <string.h>
#include "periplectiq.h"

#define CHECK(x)                                                   \
  do {                                                             \
    if (!(x)) {                                                    \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #x); \
      return 1;                                                    \
    }                                                              \
  } while (0)

int main(void) {
  PqRatFunc *a = NULL, *b = NULL, *c = NULL;
  CHECK(pq_ratfunc_parse("q + q^-1", &a) == PQ_STATUS_OK);
  CHECK(pq_ratfunc_parse("q - q^-1", &b) == PQ_STATUS_OK);
  CHECK(pq_ratfunc_binop(PQ_OP_MUL, a, b, &c) == PQ_STATUS_OK);
  char *s = NULL;
  CHECK(pq_ratfunc_to_string(c, &s) == PQ_STATUS_OK);
  CHECK(strcmp(s, "q^2 - q^-2") == 0);
  pq_string_free(s);
  pq_ratfunc_free(c);
  CHECK(pq_ratfunc_binop(PQ_OP_SUB, a, a, &c) == PQ_STATUS_OK);
  PqRatFunc *d = NULL;
  CHECK(pq_ratfunc_binop(PQ_OP_DIV, a, c, &d) == PQ_STATUS_DIVISION_BY_ZERO);
  CHECK(pq_last_error() != NULL);
  pq_ratfunc_free(a);
  pq_ratfunc_free(b);
  pq_ratfunc_free(c);

  PqModule *m = NULL;
  size_t dim = 0;
  CHECK(pq_module_new(2, 2, &m) == PQ_STATUS_OK);
  CHECK(pq_module_dim(m, &dim) == PQ_STATUS_OK && dim == 16);
  pq_module_free(m);
  CHECK(pq_module_new(1, 2, &m) == PQ_STATUS_INVALID_ARGUMENT);

  PqOptions o = {2, 2, false, NULL, NULL, false};
  PqReport *r = NULL;
  bool ok = false;
  CHECK(pq_report_new(PQ_COMMAND_DECOMPOSE, &o, &r) == PQ_STATUS_OK);
  CHECK(pq_report_ok(r, &ok) == PQ_STATUS_OK && ok);
  char *json = NULL;
  CHECK(pq_report_json(r, &json) == PQ_STATUS_OK);
  CHECK(strstr(json, "\"reducible-indecomposable\"") != NULL);
  pq_string_free(json);
  pq_report_free(r);
  printf("ok %s\n", pq_version());
  return 0;
}
