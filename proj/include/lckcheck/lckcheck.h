#ifndef LCKCHECK_H
#define LCKCHECK_H

/* C interface to the lckcheck library. Every query returns a status code and,
 * on success, a JSON document in *out that the caller releases with
 * lck_string_free. On failure *out is left NULL and lck_last_error(ctx)
 * describes the problem. Polynomials and element coefficients are accepted as
 * text ("x^4 - 2x^2 - 1", "3/2*x + 1") or JSON arrays of ascending
 * coefficients ([-1, 0, 1] or ["1/2", "3"]); for elements, x stands for the
 * field generator. */

#include <stddef.h>

#if defined(__GNUC__)
#define LCK_API __attribute__((visibility("default")))
#else
#define LCK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lck_status {
  LCK_OK = 0,
  LCK_INTERNAL_ERROR = 1,
  LCK_INVALID_INPUT = 2,
  LCK_PRECISION_EXHAUSTED = 3,
  LCK_BUDGET_EXCEEDED = 4
} lck_status;

typedef struct lck_context lck_context;
typedef struct lck_field lck_field;

/* Context: precision settings and the last error message. A context must not
 * be used from two threads at once; fields may be shared. */
LCK_API lck_context* lck_context_new(void);
LCK_API void lck_context_free(lck_context* ctx);
LCK_API lck_status lck_context_configure(lck_context* ctx, int precision_digits, int max_digits, int degree_cap);
/* Report heights relative to a field of this degree (H^degree); 0 = absolute. */
LCK_API lck_status lck_context_set_relative_degree(lck_context* ctx, int degree);
LCK_API const char* lck_last_error(const lck_context* ctx);
LCK_API const char* lck_status_name(lck_status status);
LCK_API void lck_string_free(char* s);

/* Number fields from monic irreducible integer polynomials. */
LCK_API lck_status lck_field_new(lck_context* ctx, const char* poly, lck_field** out);
LCK_API void lck_field_free(lck_field* field);
LCK_API lck_status lck_field_info(lck_context* ctx, const lck_field* field, char** out);

/* op: "minpoly", "norm", "integer", "unit" */
LCK_API lck_status lck_element(lck_context* ctx, const lck_field* field, const char* op, const char* coeffs, char** out);
/* op: "logvec", "equalmod", "equalconj", "totpos", "pointheight", "congruence";
 * alpha is used only by "congruence" */
LCK_API lck_status lck_unit(lck_context* ctx, const lck_field* field, const char* op, const char* coeffs, const char* alpha,
                    char** out);

/* Height of a root of an irreducible polynomial (coeffs NULL) or of an
 * element of the field defined by poly. */
LCK_API lck_status lck_height_algebraic(lck_context* ctx, const char* poly, const char* coeffs, char** out);
LCK_API lck_status lck_height_projective(lck_context* ctx, const char* const* coords, size_t n, char** out);
/* Newline-separated records "coeffs<TAB>height<TAB>is_root_of_unity". */
LCK_API lck_status lck_enumerate(lck_context* ctx, int deg_max, const char* bound, long candidate_cap, char** out);

LCK_API lck_status lck_subgroup_analyze(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n,
                                char** out);
LCK_API lck_status lck_subgroup_search(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n, long box,
                               char** out);
LCK_API lck_status lck_check(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n, char** out);
LCK_API lck_status lck_audit(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n, char** out);

LCK_API lck_status lck_feasible(lck_context* ctx, long s, long t, char** out);
LCK_API lck_status lck_cases(lck_context* ctx, long s, long t, char** out);

#ifdef __cplusplus
}
#endif

#endif
