/* specgap: spectral-gap laboratory for quartic graph families.
 *
 * C interface to the core library. Objects are opaque handles; functions
 * return sg_status and write results through out-parameters. Strings and
 * handles returned by the library are owned by the caller and released with
 * the matching *_free function. Error details for the most recent failing
 * call on the current thread are available via sg_last_error().
 */
#ifndef SPECGAP_H
#define SPECGAP_H

#include <stddef.h>

#if defined(_WIN32)
#define SPECGAP_API __declspec(dllexport)
#else
#define SPECGAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_ARGUMENT,      /* bad input value, loop edge, index out of range */
  SG_ERR_PARSE,         /* malformed graph6 / JSON */
  SG_ERR_UNKNOWN_KIND,  /* no such block, gadget or lemma */
  SG_ERR_ASSEMBLY,      /* attachment/grammar violations, non-quartic glue */
  SG_ERR_NOT_REGULAR,
  SG_ERR_DISCONNECTED,
  SG_ERR_SOLVER,        /* eigensolver iteration cap */
  SG_ERR_CAP,           /* order above the desk-scale cap or time cap hit */
  SG_ERR_SEARCH,        /* search space exceeded */
  SG_ERR_HYPOTHESIS,    /* lemma hypothesis failed to verify */
  SG_ERR_CHECK_FAILED,  /* fit/cell-constancy/claim verification failed */
  SG_ERR_INTERNAL
} sg_status;

typedef struct sg_graph sg_graph;
typedef struct sg_report sg_report;

SPECGAP_API const char* sg_status_name(sg_status s);
SPECGAP_API const char* sg_last_error(void);

SPECGAP_API void sg_string_free(char* s);
SPECGAP_API void sg_graph_free(sg_graph* g);
SPECGAP_API void sg_report_free(sg_report* r);

/* graphs ---------------------------------------------------------------- */

/* edges is a flat [u0,v0,u1,v1,...] list of length 2*edge_count */
SPECGAP_API sg_status sg_graph_create(int n, const int* edges, size_t edge_count, sg_graph** out);
SPECGAP_API sg_status sg_graph_from_graph6(const char* text, sg_graph** out);
SPECGAP_API sg_status sg_graph_from_json(const char* text, sg_graph** out);

SPECGAP_API int sg_graph_order(const sg_graph* g);
SPECGAP_API int sg_graph_edge_count(const sg_graph* g);
SPECGAP_API int sg_graph_is_connected(const sg_graph* g);
SPECGAP_API int sg_graph_is_regular(const sg_graph* g, int k);

SPECGAP_API sg_status sg_graph_to_graph6(const sg_graph* g, char** out);
SPECGAP_API sg_status sg_graph_to_json(const sg_graph* g, char** out);
/* canonical certificate as a hex string; equal iff isomorphic */
SPECGAP_API sg_status sg_graph_canonical_form(const sg_graph* g, char** out);

/* families and catalog graphs ------------------------------------------- */

SPECGAP_API sg_status sg_family_gn(int n, sg_graph** out);
SPECGAP_API sg_status sg_family_h(int m, int i, int j, sg_graph** out);
/* catalog tags: M0, M1, M2, M3, D0..D4; a trailing ~ mirrors the block */
SPECGAP_API sg_status sg_block_graph(const char* kind, sg_graph** out);
SPECGAP_API sg_status sg_gadget_graph(const char* name, sg_graph** out);
/* bricks joined by parallel edges; type is "end", "middle" or "complete" */
SPECGAP_API sg_status sg_long_block_graph(const char* const* bricks, size_t count,
                                          const char* type, sg_graph** out);

/* spectra ----------------------------------------------------------------*/

SPECGAP_API sg_status sg_mu(const sg_graph* g, double* out);
SPECGAP_API sg_status sg_relaxation_time(const sg_graph* g, double* out);
/* JSON document: mu, gap23, residual, eigenvalues, fiedler */
SPECGAP_API sg_status sg_spectral_report(const sg_graph* g, sg_report** out);

/* verification reports ---------------------------------------------------*/

SPECGAP_API sg_status sg_report_mu_gn(int n, sg_report** out);
SPECGAP_API sg_status sg_report_mu_range_csv(int n_from, int n_to, sg_report** out);
/* tolerances <= 0 pick the defaults (cell spread 1e-7, strict margin 1e-9) */
SPECGAP_API sg_status sg_report_structure_gn(int n, double spread_tol, double margin,
                                             sg_report** out);
SPECGAP_API sg_status sg_report_structure_h(int m, int i, int j, double spread_tol, double margin,
                                            sg_report** out);
SPECGAP_API sg_status sg_verify_table2(sg_report** out);
SPECGAP_API sg_status sg_verify_h00(int m_max, sg_report** out);
SPECGAP_API sg_status sg_verify_sandwich(int m_max, sg_report** out);
SPECGAP_API sg_status sg_verify_fits(sg_report** out);
SPECGAP_API sg_status sg_verify_lemma(const char* name, sg_report** out);
SPECGAP_API sg_status sg_verify_roots(sg_report** out);
SPECGAP_API sg_status sg_verify_asymptotic(const int* ns, size_t count, sg_report** out);
/* cap_seconds <= 0 disables the cap; n = 14 needs allow_slow != 0 */
SPECGAP_API sg_status sg_certify(int n, double cap_seconds, int allow_slow, sg_report** out);

SPECGAP_API const char* sg_report_text(const sg_report* r);
SPECGAP_API int sg_report_passed(const sg_report* r);
SPECGAP_API const char* sg_report_format(const sg_report* r); /* "json" or "csv" */

/* 0 restores the default; the SPECGAP_THREADS environment variable wins */
SPECGAP_API void sg_set_threads(int n);

#ifdef __cplusplus
}
#endif

#endif /* SPECGAP_H */
