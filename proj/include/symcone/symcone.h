/* symcone: Euclidean Jordan algebra / symmetric cone toolkit.
 *
 * C interface over the core library: opaque handles, status codes, and
 * JSON-shaped strings for structured data. Every function that can fail
 * returns an sc_status; on failure sc_last_error() carries a message for
 * the calling thread.
 *
 * Conventions:
 *   - handles returned through out-parameters are owned by the caller and
 *     released with the matching *_free function;
 *   - strings returned through char** are heap copies, released with
 *     sc_string_free;
 *   - element coordinates are always taken in the orthonormal basis of the
 *     trace inner product: Sym(n) blocks store the diagonal first and then
 *     sqrt(2)-scaled off-diagonals (i<j) row-major; Spin(d) blocks store
 *     sqrt(2) * (x0, xbar).
 */

#ifndef SYMCONE_H
#define SYMCONE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERROR_DOMAIN = 1,  /* input outside the operation's mathematical domain */
  SC_ERROR_PARSE = 2,   /* malformed serialized input */
  SC_ERROR_INVALID = 3, /* structural misuse: mismatched algebras, bad
                           sizes, unknown names, null handles */
  SC_ERROR_NUMERIC = 4  /* residual check failed or the solver broke down */
} sc_status;

typedef struct sc_algebra sc_algebra;
typedef struct sc_element sc_element;

const char* sc_version(void);

/* Message describing the last failure on this thread; never NULL. */
const char* sc_last_error(void);

void sc_string_free(char* s);

/* ---- algebras --------------------------------------------------------- */

/* Accepts {"kind":"sym","n":N} | {"kind":"spin","d":D} |
 * {"kind":"sum","parts":[...]} or the compact form "sym:3", "spin:4",
 * "sum:sym:3+spin:4" (as a JSON string or bare text). */
sc_status sc_algebra_parse(const char* text, sc_algebra** out);
sc_status sc_algebra_to_json(const sc_algebra* a, char** out);
int sc_algebra_dim(const sc_algebra* a);
int sc_algebra_rank(const sc_algebra* a);
void sc_algebra_free(sc_algebra* a);

/* ---- elements --------------------------------------------------------- */

/* {"algebra": ..., "coords": [...]} */
sc_status sc_element_parse(const char* json, sc_element** out);
sc_status sc_element_to_json(const sc_element* e, char** out);
sc_status sc_element_identity(const sc_algebra* a, sc_element** out);
/* exp of a Gaussian coordinate vector; deterministic in (seed, spread). */
sc_status sc_element_sample_cone(const sc_algebra* a, uint64_t seed,
                                 double spread, sc_element** out);
void sc_element_free(sc_element* e);

sc_status sc_jordan_product(const sc_element* x, const sc_element* y,
                            sc_element** out);
sc_status sc_inverse(const sc_element* x, sc_element** out);
sc_status sc_sqrt(const sc_element* x, sc_element** out);
sc_status sc_power(const sc_element* x, double t, sc_element** out);
sc_status sc_exp(const sc_element* x, sc_element** out);
sc_status sc_log(const sc_element* x, sc_element** out);
sc_status sc_det_trace(const sc_element* x, double* det, double* trace);
sc_status sc_inner(const sc_element* x, const sc_element* y, double* out);
/* *out = 1 iff every eigenvalue exceeds margin. */
sc_status sc_in_cone(const sc_element* x, double margin, int* out);
/* *out = 1 when x sits within 1e-10 of the cone boundary relative to its
 * norm; geometric identities carry no accuracy promise for such inputs. */
sc_status sc_near_boundary(const sc_element* x, int* out);

/* ---- cone geometry ---------------------------------------------------- */

sc_status sc_geometric_mean(const sc_element* a, const sc_element* b,
                            sc_element** out);
sc_status sc_riemannian_distance(const sc_element* a, const sc_element* b,
                                 double* out);
sc_status sc_geodesic(const sc_element* a, const sc_element* b, double t,
                      sc_element** out);
/* w with P(w^{-1}) x = s (scaling point of the log-det barrier). */
sc_status sc_scaling_point(const sc_element* x, const sc_element* s,
                           sc_element** out);

/* ---- barrier family --------------------------------------------------- */

/* spec_json: {"algebra": ..., "c0": ..., "weights": [...]}; "c0" and
 * "weights" default to 0 and all-ones. */
sc_status sc_barrier_value(const char* spec_json, const sc_element* x,
                           double* out);
sc_status sc_barrier_gradient(const char* spec_json, const sc_element* x,
                              sc_element** out);
sc_status sc_barrier_hessian_apply(const char* spec_json,
                                   const sc_element* at, const sc_element* v,
                                   sc_element** out);
/* Scaling point of the weighted barrier plus its defining residual.
 * near_boundary (may be NULL) is set to 1 when an input sits within 1e-10
 * of the cone boundary relative to its norm; such inputs are accepted but
 * the identities carry no accuracy promise there. */
sc_status sc_scaling_point_h(const char* spec_json, const sc_element* x,
                             const sc_element* s, sc_element** w,
                             double* residual, int* near_boundary);
sc_status sc_conjugate_value(const char* spec_json, const sc_element* s,
                             double* out);
sc_status sc_newton_decrement_sq(const char* spec_json, const sc_element* x,
                                 double* out);

/* ---- matrix factorizations ------------------------------------------- */

/* linmap_json: {"algebra": ..., "matrix": [[...], ...]}. Result:
 * {"omega": [[...]], "w": {element}, "residual": r}. */
sc_status sc_polar_decompose(const char* linmap_json, char** result_json);
/* matrix_json: [[...], ...]. Result: {"x": [[...]], "s": [[...]]}. */
sc_status sc_factor_nondefective(const char* matrix_json, char** result_json);
/* Result: [[...]] (special orthogonal). */
sc_status sc_rotation_from(const char* matrix_json, char** result_json);

/* ---- verification suites / solver ------------------------------------- */

/* suite in {fundamental, thm12, geo-mean, self-scaled, polar, nondefective,
 * lie-span, isotropy, alpha, classification}. config_json (all fields
 * optional): {"seed": u64, "tol": t, "trials": n, "n": n, "samples": n,
 * "algebra": ...}. The report is deterministic for a fixed config; *pass
 * tells whether every check stayed within tolerance. */
sc_status sc_run_suite(const char* suite, const char* config_json,
                       char** report, int* pass);

/* program_json: {"algebra": ..., "c": [...], "A": [[...], ...], "b": [...]}.
 * options_json (optional fields): {"tol": t, "max_iters": n, "sigma": s,
 * "seed": u64}. status_out receives "optimal" | "stall" | "iteration_limit".
 */
sc_status sc_solve(const char* program_json, const char* options_json,
                   char** report, char** status_out);

#ifdef __cplusplus
}
#endif

#endif /* SYMCONE_H */
