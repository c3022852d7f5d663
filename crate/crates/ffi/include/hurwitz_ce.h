#ifndef HURWITZ_CE_H
#define HURWITZ_CE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HceBoundCase {
  HCE_BOUND_CASE_B_CIRC = 0,
  HCE_BOUND_CASE_H_CIRC = 1,
} HceBoundCase;

/*
 Result code of every call.
 */
typedef enum HceStatus {
  HCE_STATUS_OK = 0,
  HCE_STATUS_COMPUTATION_FAILED = 1,
  HCE_STATUS_INVALID_ARGUMENT = 2,
  /*
   The program's feasible region is empty or unbounded.
   */
  HCE_STATUS_INFEASIBLE = 3,
  HCE_STATUS_NULL_POINTER = 4,
  HCE_STATUS_PANIC = 5,
} HceStatus;

/*
 A piecewise-linear program.
 */
typedef struct HceProgram HceProgram;

/*
 The exact minimum of a program and every point attaining it.
 */
typedef struct HceSolution HceSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the most recent failure on this thread, or null.

 The pointer stays valid until the next call into this library from the
 same thread. Do not free it.
 */
const char *hce_last_error(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a string obtained from this library, not yet freed.
 */
void hce_string_free(char *s);

/*
 κ_i on the degree `k` Hurwitz space as a polynomial in the CE classes,
 in text form.

 With `symbolic` set, the genus is kept as the symbol `g` and `genus` is
 ignored; otherwise a negative `genus` leaves it unspecialized. A
 `truncation` of 0 selects `i + k + 2`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum HceStatus hce_kappa(int64_t k,
                         uint32_t i,
                         int64_t genus,
                         bool symbolic,
                         int64_t truncation,
                         char **out);

/*
 Codimension of the degree 4 locus with Casnati–Ekedahl splitting types
 `e` (3 entries) and `f` (2 entries).

 # Safety
 `e` and `f` must point to 3 and 2 readable values; `out` must be valid
 for a write.
 */
enum HceStatus hce_codim_hurwitz4(const int64_t *e, const int64_t *f, int64_t *out);

/*
 Codimension of the degree 5 locus with splitting types `e` (4 entries)
 and `f` (5 entries) in genus `g`.

 # Safety
 `e` and `f` must point to 4 and 5 readable values; `out` must be valid
 for a write.
 */
enum HceStatus hce_codim_hurwitz5(const int64_t *e, const int64_t *f, int64_t g, int64_t *out);

/*
 `h¹(End e) + h¹(End f)`.

 # Safety
 `e` and `f` must point to `e_len` and `f_len` readable values; `out`
 must be valid for a write.
 */
enum HceStatus hce_codim_simultaneous(const int64_t *e,
                                      size_t e_len,
                                      const int64_t *f,
                                      size_t f_len,
                                      int64_t *out);

/*
 Rank of the `i`-th bundle in the resolution of a degree `k` cover.

 # Safety
 `out` must be valid for a write.
 */
enum HceStatus hce_ce_rank(int64_t i, int64_t k, uint64_t *out);

/*
 Loads a built-in program by name (`lemma_b4`, `lemma_coh4`,
 `lemma_b5circ`, `lemma_coh5`).

 # Safety
 `name` must be a NUL-terminated string; `out` must be valid for a
 pointer write.
 */
enum HceStatus hce_program_preset(const char *name, struct HceProgram **out);

/*
 Parses a program from its JSON form.

 # Safety
 `json` must be a NUL-terminated string; `out` must be valid for a
 pointer write.
 */
enum HceStatus hce_program_from_json(const char *json, struct HceProgram **out);

/*
 # Safety
 `program` must be null or a handle from this library, not yet freed.
 */
void hce_program_free(struct HceProgram *program);

/*
 Exact minimum of `program`. Returns [`HceStatus::Infeasible`] when the
 region is empty or unbounded.

 # Safety
 `program` must be a live handle; `out` must be valid for a pointer
 write.
 */
enum HceStatus hce_solve(const struct HceProgram *program, struct HceSolution **out);

/*
 The minimum as a `"p/q"` string (or an integer).

 # Safety
 `solution` must be a live handle; `out` must be valid for a pointer
 write.
 */
enum HceStatus hce_solution_min(const struct HceSolution *solution, char **out);

/*
 Number of points attaining the minimum; 0 for a null handle.

 # Safety
 `solution` must be null or a live handle.
 */
size_t hce_solution_argmin_count(const struct HceSolution *solution);

/*
 The `index`-th minimizer as a JSON array of `"p/q"` strings.

 # Safety
 `solution` must be a live handle; `out` must be valid for a pointer
 write.
 */
enum HceStatus hce_solution_argmin(const struct HceSolution *solution, size_t index, char **out);

/*
 # Safety
 `solution` must be null or a handle from this library, not yet freed.
 */
void hce_solution_free(struct HceSolution *solution);

/*
 Codimension lower bound for degree `k` covers of genus `g`, as a
 `"p/q"` string.

 # Safety
 `out` must be valid for a pointer write.
 */
enum HceStatus hce_bound(int64_t k, int64_t g, enum HceBoundCase case_, char **out);

/*
 Degree 4 strata of genus `g` as a JSON array. `filter` is `all`,
 `irreducible` or `non_factoring`.

 # Safety
 `filter` must be a NUL-terminated string; `out` must be valid for a
 pointer write.
 */
enum HceStatus hce_strata4_json(int64_t g, const char *filter, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HURWITZ_CE_H */
