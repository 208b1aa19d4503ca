/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef SPHQUAD_SPHQUAD_H
#define SPHQUAD_SPHQUAD_H

/*
 * C interface to libsphquad.
 *
 * Every fallible call returns an sq_status; on failure sq_last_error() holds a
 * message for the calling thread until its next call into the library.
 * Objects are opaque handles released with the matching *_destroy function
 * (NULL is accepted). Strings returned by accessors belong to the handle.
 * Rationals cross the boundary as "p/q" or "p" strings.
 */

#include <stddef.h>

#if defined(_WIN32)
#define SQ_API __declspec(dllexport)
#else
#define SQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sq_status {
  SQ_OK = 0,
  SQ_ERR_INVALID_ARGUMENT = 1, /* NULL pointer, index out of range */
  SQ_ERR_PARSE = 2,            /* malformed rational, parts or net text */
  SQ_ERR_DOMAIN = 3,           /* well-formed but outside the domain, e.g. a = 1 */
  SQ_ERR_INVARIANT = 4,        /* internal consistency check failed */
  SQ_ERR_UNDEFINED = 5,        /* quantity not defined for these inputs */
  SQ_ERR_INTERNAL = 6
} sq_status;

SQ_API const char* sq_last_error(void);
SQ_API const char* sq_status_string(sq_status status);
SQ_API const char* sq_version(void);

/* ---- string lists ------------------------------------------------------ */

typedef struct sq_strings sq_strings;

SQ_API size_t sq_strings_size(const sq_strings* list);
SQ_API const char* sq_strings_at(const sq_strings* list, size_t index); /* NULL if out of range */
SQ_API void sq_strings_destroy(sq_strings* list);

/* ---- parameters -------------------------------------------------------- */

typedef struct sq_params sq_params;

/* alpha0 >= 1; other angles positive non-integers. a may be NULL for
 * angle-only uses (sigma, limit spectrum, verify); otherwise a not in {0,1}. */
SQ_API sq_status sq_params_create(long alpha0, const char* alpha1, const char* alpha_a,
                                  const char* alpha_inf, const char* a, sq_params** out);
SQ_API void sq_params_destroy(sq_params* params);

/* [sum, product] of the exponents at infinity */
SQ_API sq_status sq_exponent_data(const sq_params* params, sq_strings** out);
/* [r_n, q_n, p_n] */
SQ_API sq_status sq_recurrence(const sq_params* params, long n, sq_strings** out);
/* alpha0 * alpha0 entries, row-major */
SQ_API sq_status sq_jacobi_matrix(const sq_params* params, sq_strings** out);
SQ_API sq_status sq_limit_spectrum(const sq_params* params, sq_strings** out);

/* ---- polynomials ------------------------------------------------------- */

typedef struct sq_poly sq_poly;

SQ_API sq_status sq_accessory_polynomial(const sq_params* params, sq_poly** out);
/* coefficients[k] multiplies x^k */
SQ_API sq_status sq_poly_from_coefficients(const char* const* coefficients, size_t count,
                                           sq_poly** out);
SQ_API int sq_poly_degree(const sq_poly* poly); /* -1 for zero */
SQ_API size_t sq_poly_size(const sq_poly* poly);
SQ_API const char* sq_poly_coefficient(const sq_poly* poly, size_t power);
SQ_API const char* sq_poly_text(const sq_poly* poly);
SQ_API void sq_poly_destroy(sq_poly* poly);

/* Real roots in (lo, hi]; NULL bounds mean -inf / +inf. Either output may be NULL. */
SQ_API sq_status sq_count_real_roots(const sq_poly* poly, const char* lo, const char* hi,
                                     size_t* distinct, size_t* with_multiplicity);

typedef struct sq_intervals sq_intervals;

SQ_API sq_status sq_isolate_real_roots(const sq_poly* poly, const char* width, sq_intervals** out);
SQ_API size_t sq_intervals_size(const sq_intervals* list);
SQ_API const char* sq_intervals_lo(const sq_intervals* list, size_t index);
SQ_API const char* sq_intervals_hi(const sq_intervals* list, size_t index);
SQ_API double sq_intervals_mid(const sq_intervals* list, size_t index);
SQ_API void sq_intervals_destroy(sq_intervals* list);

/* ---- spectral bound ---------------------------------------------------- */

typedef struct sq_pontryagin {
  int defined; /* 0 when some p_j vanishes; other fields are then zero */
  size_t positive;
  size_t negative;
  size_t max_nonreal_pairs;
  long real_lower_bound;
  int all_real_simple;
} sq_pontryagin;

/* signs may be NULL; otherwise receives up to capacity entries of +1/-1 and
 * *signs_len the full length. */
SQ_API sq_status sq_pontryagin_bound(const sq_params* params, sq_pontryagin* out, int* signs,
                                     size_t capacity, size_t* signs_len);

/* ---- sigma ------------------------------------------------------------- */

typedef struct sq_sigma sq_sigma;

/* digits = 0 uses the default (SPHQUAD_SIGMA_DIGITS or 64) */
SQ_API sq_status sq_sigma_invariant(const char* theta, const char* theta1, const char* theta2,
                                    long parity, unsigned digits, sq_sigma** out);
SQ_API sq_status sq_unitarizable(const sq_params* params, unsigned digits, sq_sigma** out);
SQ_API const char* sq_sigma_decimal(const sq_sigma* s);
SQ_API double sq_sigma_approx(const sq_sigma* s);
SQ_API int sq_sigma_compare_to_one(const sq_sigma* s); /* -1, 0 (boundary band), 1 */
SQ_API const char* sq_sigma_verdict(const sq_sigma* s); /* "yes", "no", "boundary" */
SQ_API void sq_sigma_destroy(sq_sigma* s);

SQ_API int sq_sigma0_parity(const long* nonint_parts, size_t n_nonint, const long* int_angles,
                            size_t n_int);

/* ---- nets -------------------------------------------------------------- */

typedef struct sq_parts {
  long A0, A1, A2, A3;
} sq_parts;

typedef enum sq_delta_reading { SQ_DELTA_LITERAL = 0, SQ_DELTA_SINGLE_HALVING = 1 } sq_delta_reading;

SQ_API sq_status sq_parts_parse(const char* text, sq_parts* out);

SQ_API sq_status sq_enumerate_nets(sq_parts parts, sq_strings** out);
SQ_API sq_status sq_enumerate_junctions(sq_parts parts, sq_strings** out);

/* Net text (primitive or nabla union) or junction text. */
SQ_API sq_status sq_net_parts(const char* text, sq_parts* out);
/* Empty list when valid. */
SQ_API sq_status sq_net_validate(const char* text, sq_strings** violations);
/* One string. */
SQ_API sq_status sq_net_canonicalize(const char* text, sq_strings** out);
SQ_API sq_status sq_net_equivalence_class(const char* text, sq_strings** out);
SQ_API sq_status sq_net_reflect(const char* text, sq_strings** out);
/* The two nets adjacent to a junction. */
SQ_API sq_status sq_junction_adjacency(const char* text, sq_strings** out);

SQ_API sq_status sq_existence_witness(sq_parts parts, sq_strings** out);
SQ_API sq_status sq_count_u_special(sq_parts parts, sq_delta_reading reading, long* out);
SQ_API sq_status sq_lower_bound(sq_parts parts, sq_delta_reading reading, long* out);

typedef struct sq_chainlist sq_chainlist;

SQ_API sq_status sq_build_chains(sq_parts parts, sq_chainlist** out);
SQ_API size_t sq_chainlist_size(const sq_chainlist* list);
SQ_API const char* sq_chain_kind(const sq_chainlist* list, size_t chain); /* "aa", "bb", "ab" */
SQ_API size_t sq_chain_length(const sq_chainlist* list, size_t chain);
SQ_API size_t sq_chain_net_count(const sq_chainlist* list, size_t chain);
SQ_API const char* sq_chain_net(const sq_chainlist* list, size_t chain, size_t index);
SQ_API const char* sq_chain_junction(const sq_chainlist* list, size_t chain, size_t index);
SQ_API size_t sq_chainlist_violation_count(const sq_chainlist* list);
SQ_API const char* sq_chainlist_violation(const sq_chainlist* list, size_t index);
SQ_API void sq_chainlist_destroy(sq_chainlist* list);

/* ---- verification ------------------------------------------------------ */

typedef enum sq_position { SQ_POS_NEGATIVE = 0, SQ_POS_UNIT = 1, SQ_POS_ABOVE = 2 } sq_position;
typedef enum sq_corner { SQ_CORNER_ONE = 0, SQ_CORNER_A = 1, SQ_CORNER_INF = 2 } sq_corner;

SQ_API sq_status sq_position_of(const char* a, sq_position* out);
SQ_API sq_status sq_parts_from_heun(const sq_params* params, sq_position position, sq_parts* out);
/* Explicit corner assignment (a1 is the corner opposite the integer one). */
SQ_API sq_status sq_parts_from_assignment(const sq_params* params, sq_corner a0, sq_corner a1,
                                          sq_corner a2, sq_parts* out);

SQ_API sq_status sq_sample_grid(sq_position position, size_t n, sq_strings** out);
/* "alpha0,alpha1,alpha_a,alpha_inf" per entry */
SQ_API sq_status sq_default_angle_grid(sq_strings** out);

typedef struct sq_report sq_report;

typedef struct sq_verify_row {
  sq_position position;
  long alpha0;
  sq_parts parts;
  size_t real_distinct;
  size_t real_with_multiplicity;
  int pontryagin_defined;
  long pontryagin_lb;
  long combinatorial_lb;
  int upper_ok, parity_ok, combinatorial_ok, pontryagin_ok, inconclusive, pass;
} sq_verify_row;

SQ_API sq_status sq_cross_validate(const sq_params* params, const char* const* samples,
                                   size_t count, unsigned digits, sq_report** out);
SQ_API size_t sq_report_size(const sq_report* report);
SQ_API sq_status sq_report_row(const sq_report* report, size_t index, sq_verify_row* out);
SQ_API const char* sq_report_row_a(const sq_report* report, size_t index);
SQ_API size_t sq_report_failures(const sq_report* report);
SQ_API size_t sq_report_inconclusive(const sq_report* report);
SQ_API const char* sq_report_jsonl(const sq_report* report);
SQ_API void sq_report_destroy(sq_report* report);
/* Table over several reports, returned as a single string. */
SQ_API sq_status sq_report_summary(const sq_report* const* reports, size_t count, sq_strings** out);

typedef struct sq_limit_result {
  int all_real;
  int within_tolerance;
  double max_scaled_deviation;
} sq_limit_result;

SQ_API sq_status sq_limit_check(const sq_params* params, const char* a, const char* factor,
                                sq_limit_result* out);

#ifdef __cplusplus
}
#endif

#endif /* SPHQUAD_SPHQUAD_H */
