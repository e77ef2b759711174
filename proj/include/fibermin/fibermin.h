#ifndef FIBERMIN_H
#define FIBERMIN_H

#include <stddef.h>

#if defined(_WIN32)
#define FM_API __declspec(dllexport)
#else
#define FM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
  FM_OK = 0,
  FM_INVALID_ARGUMENT = 1,
  FM_PARSE = 2,
  FM_DIMENSION_MISMATCH = 3,
  FM_NOT_DIVISIBLE = 4,
  FM_DOMAIN = 5,
  FM_NUMERIC = 6,
  FM_LIMIT = 7,
  FM_DEGENERATE = 8,
  FM_INTERNAL = 9
} fm_status;

typedef struct fm_poly fm_poly;
typedef struct fm_matrix fm_matrix;
typedef struct fm_penner fm_penner;
typedef struct fm_cone fm_cone;
typedef struct fm_segment fm_segment;
typedef struct fm_minpoint fm_minpoint;
typedef struct fm_certificate fm_certificate;

/* Message for the last failing call on this thread; never NULL. */
FM_API const char* fm_last_error(void);
FM_API const char* fm_status_name(fm_status s);
FM_API const char* fm_version(void);
/* Every char** output is heap-allocated and released here. */
FM_API void fm_string_free(char* s);

/* Laurent polynomials over Z.  JSON: {"vars":[...],"terms":[{"c":..,"e":[..]}]}
   or {"vars":[...],"expr":"x*y*z^-1 - x + 1"}. */
FM_API fm_status fm_poly_parse_json(const char* text, fm_poly** out);
FM_API fm_status fm_poly_parse_expr(const char* expr, const char* const* vars, size_t nvars, fm_poly** out);
FM_API fm_status fm_poly_to_json(const fm_poly* p, char** out);
FM_API fm_status fm_poly_to_text(const fm_poly* p, char** out);
FM_API fm_status fm_poly_add(const fm_poly* a, const fm_poly* b, fm_poly** out);
FM_API fm_status fm_poly_sub(const fm_poly* a, const fm_poly* b, fm_poly** out);
FM_API fm_status fm_poly_mul(const fm_poly* a, const fm_poly* b, fm_poly** out);
/* FM_NOT_DIVISIBLE when b does not divide a exactly. */
FM_API fm_status fm_poly_exact_div(const fm_poly* a, const fm_poly* b, fm_poly** out);
FM_API fm_status fm_poly_normalize_unit(const fm_poly* p, fm_poly** out);
FM_API fm_status fm_poly_substitute_inverse(const fm_poly* p, size_t var, fm_poly** out);
FM_API fm_status fm_poly_reversal_symmetric(const fm_poly* p, int* out);
FM_API fm_status fm_poly_equal(const fm_poly* a, const fm_poly* b, int* out);
FM_API void fm_poly_free(fm_poly* p);

/* JSON: {"vars":[...],"entries":[["t+1","1"],...]} */
FM_API fm_status fm_matrix_parse_json(const char* text, fm_matrix** out);
FM_API fm_status fm_matrix_to_json(const fm_matrix* m, char** out);
FM_API fm_status fm_matrix_char_det(const fm_matrix* m, const char* new_var, fm_poly** out);
/* char_det(pe) / char_det(pv); pv may be NULL. */
FM_API fm_status fm_teichmuller(const fm_matrix* pe, const fm_matrix* pv, const char* new_var, fm_poly** out);
FM_API void fm_matrix_free(fm_matrix* m);

/* JSON: {"vars":["t"],"intersection":[[...]],"word":[{"kind":"a","mult":[..]}],"r":14,"generic":true} */
FM_API fm_status fm_penner_parse_json(const char* text, fm_penner** out);
FM_API fm_status fm_penner_to_json(const fm_penner* s, char** out);
FM_API fm_status fm_penner_phi(const fm_penner* s, fm_poly** out);
FM_API fm_status fm_penner_symmetric(const fm_penner* s, int* out);
FM_API void fm_penner_free(fm_penner* s);

/* ref_json: array of exact rationals, e.g. [1, "1/2"]. */
FM_API fm_status fm_cone_compute(const fm_poly* p, const char* ref_json, fm_cone** out);
FM_API fm_status fm_cone_parse_json(const char* text, fm_cone** out);
FM_API fm_status fm_cone_to_json(const fm_cone* c, char** out);
FM_API void fm_cone_free(fm_cone* c);

/* Exact Teichmuller norm, written as "p/q". */
FM_API fm_status fm_teich_norm(const fm_poly* p, const char* class_json, char** out);
/* mode: "base", "drill" or "branch"; c_json may be NULL for base. */
FM_API fm_status fm_slice_covector(const char* x_json, const char* c_json, const char* mode, long d, char** out_json);

/* JSON: {"start":[..],"end":[..],"chart":{"origin":[..],"direction":[..]},"covector":[..]} */
FM_API fm_status fm_segment_parse_json(const char* text, fm_segment** out);
FM_API fm_status fm_segment_from_covector(const fm_cone* c, const char* w_json, fm_segment** out);
FM_API fm_status fm_segment_to_json(const fm_segment* s, char** out);
FM_API void fm_segment_free(fm_segment* s);

FM_API fm_status fm_lambda(const fm_poly* p, const fm_cone* c, const char* class_json, int prec, char** out_json);
FM_API fm_status fm_minimize(const fm_poly* p, const fm_cone* c, const fm_segment* s, int prec, fm_minpoint** out);
FM_API fm_status fm_minpoint_to_json(const fm_minpoint* m, char** out);
/* x_json: dual class pairing to 1 on the slice; certified may be -1 (unknown), 0 or 1. */
FM_API fm_status fm_minpoint_amodule(const fm_minpoint* m, const char* x_json, int certified, char** out_json);
FM_API void fm_minpoint_free(fm_minpoint* m);

FM_API fm_status fm_certify(const fm_poly* p, const fm_minpoint* m, int prec, fm_certificate** out);
FM_API fm_status fm_certificate_parse_json(const char* text, fm_certificate** out);
FM_API fm_status fm_certificate_to_json(const fm_certificate* c, char** out);
FM_API fm_status fm_certificate_verdict(const fm_certificate* c, int* irrational);
/* Re-verifies from the recorded data only; report is a JSON list of failures. */
FM_API fm_status fm_certificate_recheck(const fm_certificate* c, int* ok, char** report_json);
FM_API void fm_certificate_free(fm_certificate* c);

FM_API fm_status fm_census(const fm_matrix* m, long max_power, char** out_json);
FM_API fm_status fm_drilling_representatives(const char* classes_json, const char* x_json, char** out_json);

/* preset: "example1", "penner62" or "magic72". */
FM_API fm_status fm_reproduce(const char* preset, int prec, char** report_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif
