/* C interface to the hadstar library: exact-arithmetic coordinate-wise
 * (Hadamard) products of curves in projective 3-space, quadric
 * certification, singular-coordinate-locus extraction and reconstruction.
 *
 * Every request and response is a JSON string (UTF-8, NUL-terminated).
 * Responses returned through `char** out_json` are heap-allocated; release
 * them with hs_free_string.  On failure the response is NULL (except
 * hs_verify, which still writes its report) and hs_last_error carries a
 * human-readable message. */
#ifndef HADSTAR_H
#define HADSTAR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handle carrying configuration (seed, sample counts, work limits)
 * and the last error message.  Not thread-safe; use one per thread. */
typedef struct hs_context hs_context;

typedef enum hs_status {
    HS_OK = 0,        /* success */
    HS_E_VERIFY = 1,  /* a mathematical check failed (report may still be written) */
    HS_E_INPUT = 2,   /* malformed JSON or a degenerate input configuration */
    HS_E_LIMIT = 3,   /* a configured work limit was exceeded */
    HS_E_INTERNAL = 4 /* internal invariant violation */
} hs_status;

hs_context* hs_context_new(void);
void hs_context_free(hs_context* ctx);

/* Seed for every randomized sampling routine; default 1729.  Identical
 * seeds give byte-identical responses. */
void hs_context_set_seed(hs_context* ctx, uint64_t seed);

/* Sets all sampling counts to `samples` (per-component survey draws use
 * samples/5, at least 1).  Zero or negative values are ignored. */
void hs_context_set_samples(hs_context* ctx, int samples);

/* Cap on Groebner S-pair reductions before HS_E_LIMIT; default 200000. */
void hs_context_set_gb_step_limit(hs_context* ctx, long limit);

/* Cap on the implicit degree tried by implicitization; 0 (default) uses
 * the a-priori bound from the parametrization degrees. */
void hs_context_set_degree_cap(hs_context* ctx, int cap);

/* Library version, a static string such as "1.0.0". */
const char* hs_version(void);

/* Message for the most recent failed call on this context; "" after a
 * success.  Valid until the next call on the same context. */
const char* hs_last_error(const hs_context* ctx);

/* Releases a string returned through an out_json parameter. */
void hs_free_string(char* s);

/* Reduced Groebner basis and affine dimension of an ideal.
 * Request: {"ideal": {"vars": n, "generators": [poly...]},
 *           "order"?: "grevlex" | "lex", "elim"?: k}
 * ("elim": k uses a block order eliminating the first k variables.)
 * A bare ideal object is also accepted. */
hs_status hs_gb(hs_context* ctx, const char* request_json, char** out_json);

/* Coordinate-wise product of two parametrized curves: morphism check,
 * implicit image, and (for degree-2 images) quadric analysis.
 * Request: {"left": <curve>, "right": <curve>, "oracle"?: true}
 * where <curve> is {"line": {"points": [p, q]}}, {"line": {"pluecker":
 * [...]}}, {"conic": {"through": p, "B": q, "C": r}} or {"forms": ...}.
 * "oracle": true adds a Groebner-elimination cross-check of the image. */
hs_status hs_product(hs_context* ctx, const char* request_json, char** out_json);

/* Smoothness, coordinate-plane tangency and adjugate-diagonal membership
 * test for a quadric.
 * Request: {"coeffs": [...]} | {"gram": [[...]]} | {"poly": <poly>},
 * optionally wrapped as {"quadric": ...}. */
hs_status hs_analyze(hs_context* ctx, const char* quadric_json, char** out_json);

/* Singular coordinate locus of a quadric: the four coordinate-plane
 * sections, their singularity, and the section centers when defined.
 * Request: same quadric formats as hs_analyze. */
hs_status hs_scl(hs_context* ctx, const char* quadric_json, char** out_json);

/* Reconstructs the unique quadric with the given four section centers by
 * solving the 12 x 10 tangency system.  Returns HS_E_VERIFY when the
 * system is rank-deficient and no unique quadric exists.
 * Request: [p0, p1, p2, p3] or {"centers": [p0, p1, p2, p3]}, where
 * point i must lie on the coordinate plane {x_i = 0}. */
hs_status hs_reconstruct(hs_context* ctx, const char* centers_json, char** out_json);

/* Rank survey of the reconstruction system over random center
 * configurations: generic draws and the degeneracy components. */
hs_status hs_survey(hs_context* ctx, char** out_json);

/* Chart ideal of line pairs whose product lands in the reference quadric
 * x0 x3 - x1 x2: generators, irreducible components, dimension, and a
 * diagonal-orbit check of the surface-filling pairs. */
hs_status hs_fiber(hs_context* ctx, char** out_json);

/* Analysis of a surface of degree >= 2: singular-locus dimension,
 * coordinate-plane sections, cone-vertex search.
 * Request: {"equation": <poly>, "vertex"?: <point>, "hints"?: [point...]}
 * (hints are extra candidate cone vertices to test). */
hs_status hs_surface(hs_context* ctx, const char* request_json, char** out_json);

/* Runs the verification battery and writes the full report.  `only` (may
 * be NULL or "") keeps only checks whose id contains it as a substring;
 * filtering never changes the values a check computes.  Returns HS_OK when
 * no check failed (noted discrepancies are reported results, not
 * failures), HS_E_VERIFY otherwise -- the report is written either way. */
hs_status hs_verify(hs_context* ctx, const char* only, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* HADSTAR_H */
