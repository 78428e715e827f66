#ifndef PERMTAB_H
#define PERMTAB_H

/* permtab -- exact combinatorics of permutations, Young tableaux and
 * dimension-2 posets behind a plain C interface.
 *
 * All functions are reentrant.  A permtab_ctx carries configuration
 * (guards, worker count) and the error state of the last failed call made
 * through it; use one context per thread of control.
 *
 * Structured results are returned as JSON text, integers that may exceed
 * 64 bits as decimal strings, rationals as {"num":"...","den":"..."}.
 * Every char** out parameter receives a NUL-terminated heap string that
 * the caller must release with permtab_str_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PERMTAB_VERSION "0.1.0"

typedef struct permtab_ctx permtab_ctx;

typedef enum permtab_status {
  PERMTAB_OK = 0,
  PERMTAB_ERR_INVALID = 1,  /* input rejected (validation, ranges, shapes) */
  PERMTAB_ERR_GUARD = 2,    /* enumeration guard exceeded */
  PERMTAB_ERR_INTERNAL = 3, /* library invariant breached; report a bug */
  PERMTAB_ERR_NOMEM = 4
} permtab_status;

permtab_ctx *permtab_ctx_new(void);
void permtab_ctx_free(permtab_ctx *ctx);

const char *permtab_version(void);

/* Message and symbolic kind (e.g. "NotABijection", "GuardExceeded") of the
 * last failed call on this context.  Valid until the next call. */
const char *permtab_last_error(const permtab_ctx *ctx);
const char *permtab_last_error_kind(const permtab_ctx *ctx);

/* Guard names: "brute" (factorial-time sweeps, default 9), "epsilon"
 * (poset census, default 7), "canonical" (poset canonical form, default 9),
 * "syt_enumerate" (tableau backtracking, default 12), "schur" (Schur-based
 * tableau count, default 6), "rk" (two-alphabet coefficient, default 4),
 * or "all" to set every guard at once. */
permtab_status permtab_ctx_set_guard(permtab_ctx *ctx, const char *name,
                                     int value);
permtab_status permtab_ctx_set_threads(permtab_ctx *ctx, int threads);

void permtab_str_free(char *s);

/* -- correspondences ----------------------------------------------------
 * Permutations are arrays of int holding each of 1..n once.  Tableaux
 * travel as JSON arrays of rows, e.g. [[1,3],[2]].  Two-line arrays as
 * JSON arrays of [u,v] pairs in weakly increasing lexicographic order. */

/* {"P":...,"Q":...,"shape":[...],"lds":N} */
permtab_status permtab_rsk_forward(permtab_ctx *ctx, const int *word,
                                   size_t n, char **json_out);
/* {"perm":[...]} */
permtab_status permtab_rsk_inverse(permtab_ctx *ctx, const char *p_json,
                                   const char *q_json, char **json_out);
/* {"P":...,"Q":...,"shape":[...]} */
permtab_status permtab_knuth_forward(permtab_ctx *ctx, const int *us,
                                     const int *vs, size_t n,
                                     char **json_out);
/* {"array":[[u,v],...]} */
permtab_status permtab_knuth_inverse(permtab_ctx *ctx, const char *p_json,
                                     const char *q_json, char **json_out);
permtab_status permtab_perm_to_array(permtab_ctx *ctx, const int *word,
                                     size_t n, char **json_out);
/* rows = cols = 0 derives the smallest covering dimensions */
permtab_status permtab_array_to_matrix(permtab_ctx *ctx, const int *us,
                                       const int *vs, size_t n, int rows,
                                       int cols, char **json_out);
permtab_status permtab_matrix_to_array(permtab_ctx *ctx,
                                       const char *matrix_json,
                                       char **json_out);
/* Random round-trip exercise; {"trials":N,"failures":0}. */
permtab_status permtab_knuth_roundtrip_check(permtab_ctx *ctx, int trials,
                                             int max_len, int max_letter,
                                             unsigned seed, char **json_out);

/* -- permutation and tableau statistics --------------------------------- */

/* {"length":N,"witness":[positions...]} (1-based, lexicographically least) */
permtab_status permtab_lds(permtab_ctx *ctx, const int *word, size_t n,
                           char **json_out);
/* shape comes as its part list p1 >= p2 >= ... >= pm >= 1 */
permtab_status permtab_hook_lengths(permtab_ctx *ctx, const int *parts,
                                    size_t m, char **json_out);
/* method: "hook", "enumerate" or "schur" */
permtab_status permtab_syt_count(permtab_ctx *ctx, const int *parts, size_t m,
                                 const char *method, char **dec_out);
permtab_status permtab_syt_enumerate(permtab_ctx *ctx, const int *parts,
                                     size_t m, char **json_out);

/* -- exact counting ------------------------------------------------------ */

permtab_status permtab_count_catalan(permtab_ctx *ctx, int n, char **dec_out);
/* method: "brute", "shapes", "series" or "closed" (closed requires k = 3) */
permtab_status permtab_count_xi(permtab_ctx *ctx, int n, int k,
                                const char *method, char **dec_out);
permtab_status permtab_count_beth(permtab_ctx *ctx, int n, int k,
                                  char **dec_out);
/* {"classes":{"k":"count",...},"total":"..."} */
permtab_status permtab_count_epsilon(permtab_ctx *ctx, int n,
                                     char **json_out);
/* method: "brute" or "shapes" */
permtab_status permtab_count_lds_distribution(permtab_ctx *ctx, int n,
                                              const char *method,
                                              char **json_out);

/* -- dimension-2 posets -------------------------------------------------- */

/* {"n":N,"relations":[[a,b],...],"max_antichain":{"size":S,"witness":[...]}} */
permtab_status permtab_poset_from_perm(permtab_ctx *ctx, const int *word,
                                       size_t n, char **json_out);
permtab_status permtab_posets_isomorphic(permtab_ctx *ctx, const int *word_a,
                                         size_t na, const int *word_b,
                                         size_t nb, int *iso_out);

/* -- bound formulas and the verification harness ------------------------ */

permtab_status permtab_bound_xi(permtab_ctx *ctx, int n, int k,
                                char **json_out);
permtab_status permtab_bound_epsilon(permtab_ctx *ctx, int n, int k,
                                     char **json_out);
permtab_status permtab_bound_beth(permtab_ctx *ctx, int n, int k,
                                  char **json_out);
/* {"bound":{...},"exact":"..."} */
permtab_status permtab_bound_multilinear(permtab_ctx *ctx, int l, int n,
                                         int k, char **json_out);
/* Full report: {"rows":[{"statistic","n","k","exact","bound","ratio",
 * "pass",...},...],"all_pass":bool}.  max_l <= 0 defaults to max_n. */
permtab_status permtab_bounds_verify(permtab_ctx *ctx, int max_n, int max_l,
                                     char **json_out);

/* -- exact truncated series ---------------------------------------------- */

/* {"degree":D,"coefficients":[{"num","den"},...]} */
permtab_status permtab_series_b(permtab_ctx *ctx, int index, int degree,
                                char **json_out);
permtab_status permtab_series_u(permtab_ctx *ctx, int k, int degree,
                                char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* PERMTAB_H */
