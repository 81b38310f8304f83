/* C interface to the genseq shared library.
 *
 * Conventions:
 *   - Every function returns a genseq_status; results come back through out
 *     parameters.
 *   - Returned strings are heap-allocated and must be released with
 *     genseq_string_free().
 *   - On failure, genseq_last_error() returns a message describing the
 *     problem (thread-local, valid until the next failing call on the same
 *     thread).
 *   - Structured results (reports, matrices, coefficient lists) are returned
 *     as JSON text; sequence values are decimal strings, since they exceed
 *     any fixed-width integer type.
 */
#ifndef GENSEQ_H
#define GENSEQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum genseq_status {
    GENSEQ_OK = 0,
    GENSEQ_ERROR_ARGUMENT = 1,  /* invalid argument or violated hypothesis */
    GENSEQ_ERROR_NOT_FOUND = 2, /* unknown identity or sequence name */
    GENSEQ_ERROR_PARSE = 3,     /* malformed input (b-file) */
    GENSEQ_ERROR_IO = 4,        /* file not readable */
    GENSEQ_ERROR_INTERNAL = 5
} genseq_status;

/* Validated parameter tuple (i, k, r, s); opaque. */
typedef struct genseq_params genseq_params;

const char* genseq_version(void);

/* Thread-local message for the most recent failure on this thread. */
const char* genseq_last_error(void);

void genseq_string_free(char* str);

genseq_status genseq_params_create(int64_t i, int64_t k, int64_t r, int64_t s,
                                   genseq_params** out);
void genseq_params_destroy(genseq_params* params);

/* Sequence evaluation.
 *   kind:    "f" or "l"          (l requires k > i)
 *   backend: "recurrence", "closed", "genfun", "matrix", "tilings"
 *            (closed/genfun require k >= i; matrix requires k >= i and
 *             k >= 2; kind "l" supports recurrence and tilings)
 * Returns JSON: {"params":{...},"kind":...,"backend":...,
 *                "values":[{"n":-1,"value":"1"},...]}. */
genseq_status genseq_eval(const genseq_params* params, const char* kind, const char* backend,
                          int64_t lo, int64_t hi, char** out_json);

/* Tiling enumeration. type is "f" or "l". */
genseq_status genseq_count_tilings(const genseq_params* params, const char* type, int64_t n,
                                   char** out_decimal);
/* Renders up to `limit` tilings, one per line, in enumeration order. */
genseq_status genseq_render_tilings(const genseq_params* params, const char* type, int64_t n,
                                    int64_t limit, char** out_text);

/* Generating function; JSON {"numerator":["1",...],"denominator":["1",...]}. */
genseq_status genseq_genfun(const genseq_params* params, char** out_json);
/* First `count` series coefficients; JSON {"coefficients":["1",...]}. */
genseq_status genseq_genfun_coeffs(const genseq_params* params, int64_t count, char** out_json);

/* Generator matrices. JSON {"dim":k,"entries":[["...","..."],...]}. */
genseq_status genseq_matrix_q(const genseq_params* params, char** out_json);
genseq_status genseq_matrix_a(const genseq_params* params, char** out_json);
/* build_a * build_q^(n+1); bottom-right entry equals F(n). */
genseq_status genseq_matrix_power(const genseq_params* params, int64_t n, char** out_json);
genseq_status genseq_matrix_det_q(const genseq_params* params, char** out_decimal);
genseq_status genseq_matrix_det_a(const genseq_params* params, char** out_decimal);
/* Closed-form determinant of the power matrix; requires i = 1, n >= 0. */
genseq_status genseq_cassini(const genseq_params* params, int64_t n, char** out_decimal);

/* Identity verification. JSON list of {"id","summary","aux":[...]}. */
genseq_status genseq_identity_list(char** out_json);
/* identity is a registry id or "all". Sweeps i,k in 1..i_max/k_max, r,s in
 * 1..r_max/s_max, n in -1..n_max. out_failures receives the total failure
 * count. Single identity JSON:
 *   {"identity":...,"checked":...,"passed":...,"failed":...,
 *    "counterexamples":[...]}
 * For "all": {"identities":[...],"checked":...,"passed":...,"failed":...}. */
genseq_status genseq_verify(const char* identity, int64_t i_max, int64_t k_max, int64_t r_max,
                            int64_t s_max, int64_t n_max, int64_t* out_failures,
                            char** out_json);

/* Named sequences (Fibonacci, Lucas, Pell, Jacobsthal, Padovan, Narayana,
 * A003269; names are case-insensitive, OEIS ids accepted). */
genseq_status genseq_named_value(const char* name, int64_t m, char** out_decimal);
/* Compares the named sequence against b-file text over [lo, hi]; pass
 * lo > hi to use the reference's own coverage. JSON:
 *   {"sequence":...,"checked":...,"failed":...,"mismatches":[...]}. */
genseq_status genseq_compare_bfile(const char* name, const char* bfile_text, int64_t lo,
                                   int64_t hi, int64_t* out_failures, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GENSEQ_H */
