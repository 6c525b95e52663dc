/* SPDX-License-Identifier: Apache-2.0
 *
 * Compiled as plain C11: proves the public header and the shared
 * library are usable without a C++ toolchain. No assert(): it must
 * keep checking under NDEBUG builds.
 */
#include <stdio.h>
#include <string.h>

#include "floorsq.h"

static int failures = 0;

#define CHECK(cond)                                             \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  CHECK(fsq_isqrt(16) == 4);
  CHECK(fsq_is_forbidden_form(28) == 1);

  fsq_set* set = NULL;
  CHECK(fsq_set_compute(7, 'r', &set) == FSQ_OK);
  if (set != NULL) {
    CHECK(fsq_set_size(set) == 2);
    uint64_t elems[2] = {0, 0};
    CHECK(fsq_set_copy_elements(set, elems, 2) == 2);
    CHECK(elems[0] == 4 && elems[1] == 6);
    fsq_set_free(set);
  }

  fsq_check* chk = NULL;
  CHECK(fsq_check_run(104, &chk) == FSQ_OK);
  if (chk != NULL) {
    CHECK(fsq_check_get_outcome(chk) == FSQ_CHECK_PASS);
    fsq_check_free(chk);
  }

  fsq_rep* rep = NULL;
  CHECK(fsq_rep_construct(7, 1, &rep) == FSQ_OK);
  if (rep != NULL) {
    uint64_t triple[3] = {0, 0, 0};
    fsq_rep_triple(rep, triple);
    CHECK(triple[0] == 3 && triple[1] == 1 && triple[2] == 1);
    fsq_rep_free(rep);
  }

  char* text = NULL;
  CHECK(fsq_render_residues(7, 'r', 0, &text) == FSQ_OK);
  if (text != NULL) {
    CHECK(strcmp(text, "R_7 = {4, 6}\n") == 0);
    fsq_string_free(text);
  }

  if (failures == 0) printf("c api ok\n");
  return failures == 0 ? 0 : 1;
}
