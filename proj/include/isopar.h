/* isopar — exact-arithmetic workbench for polynomial ideal theory and
 * quartic isoparametric families.
 *
 * C interface in two tiers:
 *   1. A JSON command gateway (isopar_execute) exposing every operation the
 *      command-line tool offers; requests and reports are JSON text.
 *   2. Typed opaque handles for the core algebra objects (rings, polynomials,
 *      ideals) for direct embedding.
 *
 * All strings returned through char** are malloc'd; release them with
 * isopar_free.  Errors never throw across this boundary: every entry point
 * returns a status code and the per-thread message of the most recent
 * failure is available from isopar_last_error().
 */
#ifndef ISOPAR_H
#define ISOPAR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the command-line tool uses them verbatim as exit codes. */
typedef enum isopar_status {
  ISOPAR_OK = 0,           /* operation ran and every requested check passed */
  ISOPAR_CHECK_FAILED = 1, /* operation ran; at least one check failed */
  ISOPAR_BAD_REQUEST = 2,  /* parse/io/precondition/unsupported/internal */
  ISOPAR_BUDGET = 3        /* a configured resource cap stopped the run */
} isopar_status;

/* Message of the most recent failure on this thread; "" when none.  The
 * buffer is owned by the library and valid until the next call. */
const char* isopar_last_error(void);

/* Releases any buffer this library returned through a char**. */
void isopar_free(char* buf);

/* ------------------------------------------------------------------------
 * JSON command gateway.
 *
 * request_json: {"op": "<name>", ...parameters...}.  Operation names mirror
 * the command-line tree: "poly.canon", "ideal.gb", "ideal.member",
 * "ideal.radmember", "ideal.quotient", "ideal.dim", "ideal.singular",
 * "ideal.edim", "regseq.check", "regseq.generatereg",
 * "regseq.serre-reduced", "regseq.serre-prime", "regseq.koszul",
 * "regseq.solve-rab", "clifford.build", "clifford.verify", "fkm.build",
 * "fkm.verify-munzner", "fkm.focal", "fkm.shape", "fkm.expand",
 * "fkm.identities", "fkm.rab", "fkm.condition-a", "fkm.pencil",
 * "fkm.codim", "fkm.verify-all".
 *
 * On status 0 or 1, *report_json receives a malloc'd JSON report (schema
 * "isopar-report/1", deterministic except for its "timestamp" member).  On
 * status 2 or 3 *report_json is NULL and isopar_last_error() explains.
 * ------------------------------------------------------------------------ */
isopar_status isopar_execute(const char* request_json, char** report_json);

/* ------------------------------------------------------------------------
 * Typed handles.
 * ------------------------------------------------------------------------ */
typedef struct isopar_ring isopar_ring;
typedef struct isopar_poly isopar_poly;
typedef struct isopar_ideal isopar_ideal;

/* Ring with the given variable names; quadext_d = 0 for rational
 * coefficients, d >= 2 to adjoin sqrt(d).  NULL on failure. */
isopar_ring* isopar_ring_new(const char* const* names, size_t count,
                             long quadext_d);
void isopar_ring_release(isopar_ring* r);

/* Parse `text` in the polynomial grammar over `r`.  NULL on failure. */
isopar_poly* isopar_poly_parse(const isopar_ring* r, const char* text);
void isopar_poly_release(isopar_poly* p);
/* Canonical text (terms in descending monomial order). */
char* isopar_poly_str(const isopar_poly* p);
/* Total degree; INT_MIN for the zero polynomial. */
int isopar_poly_degree(const isopar_poly* p);
isopar_poly* isopar_poly_add(const isopar_poly* a, const isopar_poly* b);
isopar_poly* isopar_poly_mul(const isopar_poly* a, const isopar_poly* b);

/* Ideal generated by `gens` (all over the same ring).  NULL on failure. */
isopar_ideal* isopar_ideal_new(const isopar_poly* const* gens, size_t count);
void isopar_ideal_release(isopar_ideal* I);

/* Reduced Groebner basis as a JSON report (basis text plus run statistics);
 * order is "grevlex" or "lex".  NULL on failure. */
char* isopar_ideal_groebner_json(const isopar_ideal* I, const char* order);

/* Membership tests: 1 = yes, 0 = no, -1 = failure (see isopar_last_error). */
int isopar_ideal_member(const isopar_ideal* I, const isopar_poly* p);
int isopar_ideal_radical_member(const isopar_ideal* I, const isopar_poly* p);

/* Krull dimension of the quotient ring; -1 when the variety is empty,
 * -2 on failure. */
int isopar_ideal_dimension(const isopar_ideal* I);

#ifdef __cplusplus
}
#endif

#endif /* ISOPAR_H */
