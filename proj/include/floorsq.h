/* SPDX-License-Identifier: Apache-2.0
 *
 * floorsq - representation of natural numbers as sums of three terms of
 * the sequence floor(n^2/a), via quadratic-residue sets and the
 * three-square theorem.
 *
 * C API of the shared library. All handles are opaque; every function
 * that can fail returns an fsq_status. Functions returning strings
 * allocate with malloc; release with fsq_string_free.
 */
#ifndef FLOORSQ_H
#define FLOORSQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FSQ_API __declspec(dllexport)
#else
#define FSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. FSQ_OK and FSQ_FAIL are verdicts (a computation that ran
 * to completion); the FSQ_ERR_* values are faults. The numeric values of
 * FSQ_OK/FSQ_FAIL/FSQ_ERR_* match the CLI exit codes 0/1/2. */
typedef enum fsq_status {
  FSQ_OK = 0,            /* affirmative verdict */
  FSQ_FAIL = 1,          /* mathematically negative verdict */
  FSQ_ERR_INVALID = 2,   /* invalid argument (e.g. modulus 0) */
  FSQ_ERR_OVERFLOW = 3,  /* 64-bit overflow detected and rejected */
  FSQ_ERR_INTERNAL = 4   /* broken internal contract; report a bug */
} fsq_status;

/* Thread-local message describing the last FSQ_ERR_* returned on this
 * thread. Empty string if none. */
FSQ_API const char* fsq_last_error(void);

FSQ_API const char* fsq_version(void);

/* ------------------------------------------------------------------ */
/* Exact integer primitives                                            */
/* ------------------------------------------------------------------ */

/* floor(sqrt(n)), exact for the full 64-bit range. */
FSQ_API uint64_t fsq_isqrt(uint64_t n);

FSQ_API int fsq_is_perfect_square(uint64_t n);

/* 1 iff n = 4^s * (8t + 7) for some s, t >= 0. */
FSQ_API int fsq_is_forbidden_form(uint64_t n);

/* Decompose n = x^2 + y^2 + z^2 with x >= y >= z. Sets *found to 0 and
 * leaves out untouched when no decomposition exists (exactly the
 * forbidden-form inputs). */
FSQ_API fsq_status fsq_three_square_decompose(uint64_t n, uint64_t out[3],
                                              int* found);

/* ------------------------------------------------------------------ */
/* Residue sets Q_a, A_a, R_a                                          */
/* ------------------------------------------------------------------ */

typedef struct fsq_set fsq_set;

/* kind: 'q' quadratic residues, 'a' triple sums, 'r' unique
 * representatives. Requires a >= 1. */
FSQ_API fsq_status fsq_set_compute(uint64_t a, char kind, fsq_set** out);
FSQ_API void fsq_set_free(fsq_set* set);

FSQ_API uint64_t fsq_set_modulus(const fsq_set* set);
FSQ_API char fsq_set_kind(const fsq_set* set);
FSQ_API size_t fsq_set_size(const fsq_set* set);
FSQ_API int fsq_set_contains(const fsq_set* set, uint64_t value);
/* Copies up to cap elements (ascending) into buf; returns number copied. */
FSQ_API size_t fsq_set_copy_elements(const fsq_set* set, uint64_t* buf,
                                     size_t cap);

/* ------------------------------------------------------------------ */
/* Hypothesis check (mod-8 witness)                                    */
/* ------------------------------------------------------------------ */

typedef struct fsq_check fsq_check;

typedef enum fsq_check_outcome {
  FSQ_CHECK_PASS = 0,
  FSQ_CHECK_FAIL = 1,
  FSQ_CHECK_EMPTY_R = 2
} fsq_check_outcome;

/* Runs the mod-8 witness check for modulus a. Returns FSQ_OK on pass,
 * FSQ_FAIL on fail/empty-R; *out is populated in all three cases. */
FSQ_API fsq_status fsq_check_run(uint64_t a, fsq_check** out);
FSQ_API void fsq_check_free(fsq_check* chk);

FSQ_API fsq_check_outcome fsq_check_get_outcome(const fsq_check* chk);
/* Least residue class 0..7 with no admissible r; -1 unless outcome is
 * FSQ_CHECK_FAIL. */
FSQ_API int fsq_check_blocking_class(const fsq_check* chk);
/* Witness r per residue class 0..7. FSQ_FAIL unless outcome is PASS. */
FSQ_API fsq_status fsq_check_witness(const fsq_check* chk, uint64_t out_r[8]);

/* ------------------------------------------------------------------ */
/* Representations N = floor(A^2/a) + floor(B^2/a) + floor(C^2/a)      */
/* ------------------------------------------------------------------ */

typedef struct fsq_rep fsq_rep;

/* Constructive route: picks the smallest admissible r in R_a, decomposes
 * a*n + r into three squares and verifies every identity. Returns
 * FSQ_FAIL (with *out = NULL) when no r in R_a avoids the forbidden
 * form. */
FSQ_API fsq_status fsq_rep_construct(uint64_t a, uint64_t n, fsq_rep** out);
FSQ_API void fsq_rep_free(fsq_rep* rep);

FSQ_API uint64_t fsq_rep_modulus(const fsq_rep* rep);
FSQ_API uint64_t fsq_rep_target(const fsq_rep* rep);
FSQ_API uint64_t fsq_rep_r(const fsq_rep* rep);
FSQ_API void fsq_rep_triple(const fsq_rep* rep, uint64_t out[3]);
FSQ_API void fsq_rep_floor_terms(const fsq_rep* rep, uint64_t out[3]);

/* Representation at modulus a*k^2 with the same target (triple scaled by
 * k, r scaled by k^2). Requires k >= 1. */
FSQ_API fsq_status fsq_rep_scale(const fsq_rep* rep, uint64_t k,
                                 fsq_rep** out);

/* Exhaustive oracle, independent of the residue-set machinery: searches
 * x >= y >= z, x <= search_bound, for floor-term sum n. Pass
 * FSQ_BOUND_AUTO to use the tight default bound. */
#define FSQ_BOUND_AUTO UINT64_MAX
FSQ_API fsq_status fsq_brute_force_represent(uint64_t a, uint64_t n,
                                             uint64_t search_bound,
                                             uint64_t out[3], int* found);

/* ------------------------------------------------------------------ */
/* Range verification                                                  */
/* ------------------------------------------------------------------ */

typedef struct fsq_verify fsq_verify;

/* Constructs and validates a representation for every n in [0, n_max].
 * threads = 0 picks a default worker count. Returns FSQ_OK when there
 * are no failures, FSQ_FAIL otherwise. */
FSQ_API fsq_status fsq_verify_range(uint64_t a, uint64_t n_max,
                                    unsigned threads, fsq_verify** out);
FSQ_API void fsq_verify_free(fsq_verify* rep);

FSQ_API uint64_t fsq_verify_verified(const fsq_verify* rep);
FSQ_API size_t fsq_verify_failure_count(const fsq_verify* rep);
FSQ_API size_t fsq_verify_copy_failures(const fsq_verify* rep, uint64_t* buf,
                                        size_t cap);

/* ------------------------------------------------------------------ */
/* Modulus scan and square closure                                     */
/* ------------------------------------------------------------------ */

typedef struct fsq_scan fsq_scan;

typedef enum fsq_mod_status {
  FSQ_MOD_METHOD_PASS = 0,
  FSQ_MOD_METHOD_FAIL = 1,
  FSQ_MOD_ASSUMED = 2,
  FSQ_MOD_CLOSURE_DERIVED = 3
} fsq_mod_status;

typedef struct fsq_scan_entry_info {
  uint64_t modulus;
  fsq_mod_status status;
  int blocking_class; /* method_fail only, else -1 */
  int empty_r;        /* 1 when R_a is empty */
  uint64_t base;      /* closure_derived provenance, else 0 */
  uint64_t k;         /* closure_derived provenance, else 0 */
} fsq_scan_entry_info;

/* Classifies every a in [a_min, a_max] by the mod-8 witness check. */
FSQ_API fsq_status fsq_scan_moduli(uint64_t a_min, uint64_t a_max,
                                   unsigned threads, fsq_scan** out);

/* Square closure {base * k^2 <= bound} of the given seeds, tagged with
 * (smallest base, smallest k) provenance. Seed statuses must be
 * FSQ_MOD_METHOD_PASS or FSQ_MOD_ASSUMED. */
FSQ_API fsq_status fsq_closure_list(const uint64_t* seeds,
                                    const fsq_mod_status* seed_status,
                                    size_t n_seeds, uint64_t bound,
                                    fsq_scan** out);
FSQ_API void fsq_scan_free(fsq_scan* scan);

FSQ_API size_t fsq_scan_entry_count(const fsq_scan* scan);
FSQ_API fsq_status fsq_scan_entry(const fsq_scan* scan, size_t index,
                                  fsq_scan_entry_info* out);
/* R_a of the entry; same lifetime rules as fsq_set_compute. */
FSQ_API fsq_status fsq_scan_entry_r_set(const fsq_scan* scan, size_t index,
                                        fsq_set** out);

/* ------------------------------------------------------------------ */
/* Rendered command output (shared by the CLI)                         */
/* ------------------------------------------------------------------ */

/* Each renderer computes the full result and produces either the plain
 * text or the canonical JSON envelope for it, exactly as the floorsq
 * tool prints. Returned status carries the verdict (FSQ_OK / FSQ_FAIL)
 * or fault; *out is set for verdicts and for faults in JSON mode (an
 * "error" envelope), and NULL otherwise. */
FSQ_API fsq_status fsq_render_residues(uint64_t a, char kind, int as_json,
                                       char** out);
FSQ_API fsq_status fsq_render_check(uint64_t a, int as_json, char** out);
FSQ_API fsq_status fsq_render_represent(uint64_t a, uint64_t n,
                                        int with_oracle, int as_json,
                                        char** out);
FSQ_API fsq_status fsq_render_scan(uint64_t a_min, uint64_t a_max,
                                   const uint64_t* assume, size_t n_assume,
                                   const uint64_t* closure_bound,
                                   unsigned threads, int as_json, char** out);
FSQ_API fsq_status fsq_render_verify(uint64_t a, uint64_t n_max,
                                     unsigned threads, int as_json,
                                     char** out);
FSQ_API fsq_status fsq_render_reproduce(int as_json, char** out);

FSQ_API void fsq_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FLOORSQ_H */
