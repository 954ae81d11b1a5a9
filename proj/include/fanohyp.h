#ifndef FANOHYP_H
#define FANOHYP_H

/* C interface to the fanohyp core: cohomology of irreducible homogeneous
 * bundles on Grassmannians, exact section-domination tests on weighted
 * projective spaces, and the Fano surface hyperbolicity catalog.
 *
 * Every operation fills an opaque result handle that can be rendered as
 * JSON, CSV or Markdown. The rendered string stays owned by the handle.
 * On failure the handle is untouched and fanohyp_last_error() describes
 * the problem (thread-local). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fanohyp_status {
  FANOHYP_OK = 0,
  FANOHYP_ERR_INVALID_ARGUMENT = 1,
  FANOHYP_ERR_INTERNAL = 2
} fanohyp_status;

typedef enum fanohyp_format {
  FANOHYP_FORMAT_JSON = 0,
  FANOHYP_FORMAT_CSV = 1,
  FANOHYP_FORMAT_MARKDOWN = 2
} fanohyp_format;

typedef struct fanohyp_result fanohyp_result;

const char* fanohyp_version(void);

/* Message of the most recent failure on this thread, or "". */
const char* fanohyp_last_error(void);

/* Cohomology of K_u(U*) (x) K_q(Q*) (x) O(twist) on Gr(k,n). u and q are
 * weakly decreasing nonnegative weights with fewer than k (resp. n-k)
 * rows after stripping zeros; NULL with length 0 is the empty weight. */
fanohyp_status fanohyp_bott(int k, int n, const long long* u, size_t u_len,
                            const long long* q, size_t q_len, long long twist,
                            fanohyp_result** out);

/* Twist sweep of K_u(U*) (x) K_q(Q*) (x) O(-N) for n_min <= N <= n_max,
 * recording every nonzero cohomology in degree <= i_max. */
fanohyp_status fanohyp_scan(int k, int n, const long long* u, size_t u_len,
                            const long long* q, size_t q_len, int i_max,
                            long long n_min, long long n_max,
                            fanohyp_result** out);

/* Regenerate the vanishing-region and nonvanishing-exception tables of
 * family id ("1-8", "1-9", "1-10"), sweeping twists up to n_max
 * (0 = the family default). */
fanohyp_status fanohyp_tables(const char* id, long long n_max,
                              fanohyp_result** out);

/* Re-verify the recorded tables of family id, and when a > 0 and d > 0
 * also run the curve-level vanishing check at surface degree a and curve
 * class d. */
fanohyp_status fanohyp_koszul_verify(const char* id, long long a, long long d,
                                     fanohyp_result** out);

/* Compare the closed-form (non)vanishing description of twisted K_w(U*)
 * and K_w(Q*) against direct computation on Gr(k,n), for all admissible
 * weights and twists up to d_max. */
fanohyp_status fanohyp_closed_form(int k, int n, long long d_max,
                                   fanohyp_result** out);

/* Exact test on P(1^units, heavy_1..heavy_l) of whether the p-vanishing
 * sections of O(d) generate those of O(a) under multiplication. */
fanohyp_status fanohyp_wps_check(int units, const long long* heavy,
                                 size_t heavy_len, long long d, long long a,
                                 fanohyp_result** out);

/* Hyperbolicity verdict for the degree-a surface of catalog family id,
 * with the genus-slope justification tree; audit != 0 additionally
 * recomputes every machine-checkable fact behind the verdict. */
fanohyp_status fanohyp_fano(const char* id, long long a, int audit,
                            fanohyp_result** out);

/* Render the result; the returned string is owned by the handle and
 * valid until fanohyp_result_free. */
fanohyp_status fanohyp_result_render(fanohyp_result* res,
                                     fanohyp_format format, const char** out);

void fanohyp_result_free(fanohyp_result* res);

#ifdef __cplusplus
}
#endif

#endif /* FANOHYP_H */
