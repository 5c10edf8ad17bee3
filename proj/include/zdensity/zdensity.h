#ifndef ZDENSITY_ZDENSITY_H
#define ZDENSITY_ZDENSITY_H

/*
 * C interface to the zdensity library: explicit constants of a zero-density
 * bound for the Riemann zeta function, computed at arbitrary precision.
 *
 * Conventions
 *   - Every fallible call returns zd_status. On failure the message is
 *     available from zd_last_error() (thread-local, valid until the next
 *     call on the same thread).
 *   - Real inputs are decimal strings ("0.6472", "3.061e10") so they reach
 *     the working precision exactly. Grid inputs given as doubles are first
 *     converted through their shortest round-trip decimal form.
 *   - Opaque handles are created by *_create / compute calls and released by
 *     the matching *_destroy. Strings returned from a handle stay valid until
 *     that handle is destroyed.
 *   - A zd_context must not be used by two threads at the same time. Distinct
 *     contexts are independent.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(ZD_BUILDING_LIBRARY)
#define ZD_API __attribute__((visibility("default")))
#else
#define ZD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zd_status {
  ZD_OK = 0,
  ZD_ERR_DOMAIN = 1,
  ZD_ERR_POLE = 2,
  ZD_ERR_UNSUPPORTED_HEIGHT = 3,
  ZD_ERR_SINGULAR_PARAMETER = 4,
  ZD_ERR_INVALID_ARGUMENT = 5,
  ZD_ERR_NULL_POINTER = 6,
  ZD_ERR_OUT_OF_RANGE = 7,
  ZD_ERR_INTERNAL = 8
} zd_status;

typedef enum zd_rounding {
  ZD_ROUND_UP = 0, /* toward +infinity */
  ZD_ROUND_DOWN = 1,
  ZD_ROUND_NEAREST = 2
} zd_rounding;

#define ZD_TEXT_MAX 256

/* A computed real: nearest double, full decimal text (context digits,
 * at most 200 significant), and the output rendering at the context's
 * output_digits with its rounding direction. */
typedef struct zd_number {
  double value;
  char text[ZD_TEXT_MAX];
  char rounded[ZD_TEXT_MAX];
} zd_number;

ZD_API const char* zd_version(void);
ZD_API const char* zd_last_error(void);
ZD_API const char* zd_status_name(zd_status status);

/* ---------------------------------------------------------------- context */

typedef struct zd_context zd_context;

/* digits >= 30; 0 <= output_digits <= digits. digits = 0 reads the
 * ZDENSITY_PRECISION environment variable (default 60). */
ZD_API zd_status zd_context_create(int digits, int output_digits, zd_context** out);
ZD_API void zd_context_destroy(zd_context* ctx);
ZD_API zd_status zd_context_set_rounding(zd_context* ctx, zd_rounding rounding);
ZD_API int zd_context_digits(const zd_context* ctx);
ZD_API int zd_context_output_digits(const zd_context* ctx);

/* Model settings; defaults H_rh = 3.061e10, eta = 0.0001, N0 = 1000,
 * t0 = 14.1347. */
ZD_API zd_status zd_context_set_h_rh(zd_context* ctx, const char* H_rh);
ZD_API zd_status zd_context_set_eta(zd_context* ctx, const char* eta);
ZD_API zd_status zd_context_set_n0(zd_context* ctx, uint64_t N0);
ZD_API zd_status zd_context_set_t0(zd_context* ctx, const char* t0);
/* Current setting as text: "H_rh", "eta", "sigma1", "N0", "t0". */
ZD_API zd_status zd_context_setting(const zd_context* ctx, const char* key, const char** text);

/* ------------------------------------------------------ special functions */

ZD_API zd_status zd_zeta_real(zd_context* ctx, const char* sigma, zd_number* out);
ZD_API zd_status zd_zeta_complex(zd_context* ctx, const char* sigma, const char* t, zd_number* re, zd_number* im);
ZD_API zd_status zd_log_deriv_zeta_real(zd_context* ctx, const char* sigma, zd_number* out);
ZD_API zd_status zd_dirichlet_partial_sum(zd_context* ctx, const char* sigma, const char* t, const char* x,
                                          zd_number* re, zd_number* im);
ZD_API zd_status zd_mangoldt(uint64_t n, double* out);

/* -------------------------------------------------- approximation constant */

ZD_API zd_status zd_big_C(zd_context* ctx, const char* sigma, const char* c, const char* t0, zd_number* out);
/* c0 = C(1/2, 1, t0): unrounded and rounded up at output_digits. */
ZD_API zd_status zd_c0(zd_context* ctx, zd_number* unrounded, zd_number* rounded);

/* ---------------------------------------------------------- second moment */

/* Sub-terms E11..E14 at (sigma0, T); out has 4 entries. */
ZD_API zd_status zd_e1_subterms(zd_context* ctx, const char* sigma0, const char* T, zd_number out[4]);
ZD_API zd_status zd_e12_numerator(zd_context* ctx, const char* sigma0, zd_number* out);
/* Bisection bracket of the E12 sign change, width <= 1e-12. */
ZD_API zd_status zd_e12_sign_change(zd_context* ctx, zd_number* left, zd_number* right);

typedef struct zd_values zd_values;

/* Keys: zeta_2sigma0 eps1 eps2 eps3 E1 e11 e12 e13 e14 bound half_log_bound.
 * Uses the context's H_rh. */
ZD_API zd_status zd_moment_bound(zd_context* ctx, const char* sigma0, const char* H, zd_values** out);

typedef struct zd_quadrature {
  double mean_square;
  double relative_change;
  double step;
  uint64_t evaluations;
} zd_quadrature;

/* (1/(T-H)) int_H^T |zeta(sigma0 + it)|^2 dt; 2 <= H < T <= 1e5. */
ZD_API zd_status zd_second_moment(zd_context* ctx, const char* sigma0, const char* H, const char* T,
                                  zd_quadrature* out);

/* ------------------------------------------------------------ strip terms */

ZD_API zd_status zd_E2(zd_context* ctx, zd_number* unrounded, zd_number* rounded);
ZD_API zd_status zd_E3(zd_context* ctx, const char* sigma0, zd_number* out);
ZD_API zd_status zd_E4(zd_context* ctx, const char* sigma0, const char* H, zd_number* out);

/* ------------------------------------------------------------ named values */

ZD_API size_t zd_values_count(const zd_values* v);
ZD_API const char* zd_values_key(const zd_values* v, size_t i);
ZD_API zd_status zd_values_get(const zd_values* v, const char* key, zd_number* out);
ZD_API void zd_values_destroy(zd_values* v);

/* ----------------------------------------------------------- coefficients */

typedef struct zd_coefficients zd_coefficients;

/* Uses the context's H_rh, eta, N0 and t0. */
ZD_API zd_status zd_coefficients_compute(zd_context* ctx, const char* sigma, const char* sigma0, const char* H,
                                         zd_coefficients** out);
ZD_API void zd_coefficients_destroy(zd_coefficients* c);

/* Keys: sigma sigma0 H H_rh b1 b2 b3 c1 c2 c3 c0 zeta_2sigma0 eps1 eps2 eps3
 * E1 e11 e12 e13 e14 bound E2 E3 E4. */
ZD_API zd_status zd_coefficients_get(const zd_coefficients* c, const char* key, zd_number* out);

/* Table rendering: b1 b2 c1 c2 rounded up at `decimals`; H b3 c3 ceilings. */
ZD_API zd_status zd_coefficients_format(const zd_coefficients* c, const char* key, int decimals, const char** text);

/* b1 (T - H) + b2 log(T H) + b3; requires T >= H_rh. */
ZD_API zd_status zd_bound_N(zd_context* ctx, const zd_coefficients* c, const char* T, zd_number* value,
                            int64_t* ceiling);

/* --------------------------------------------------------- published bounds */

typedef enum zd_nt_variant { ZD_NT_ROSSER = 0, ZD_NT_TRUDGIAN = 1 } zd_nt_variant;

ZD_API zd_status zd_nt_band(zd_context* ctx, const char* T, zd_nt_variant variant, zd_number* lower,
                            zd_number* upper);
ZD_API zd_status zd_ramare_bound(zd_context* ctx, const char* sigma, const char* T, zd_number* out);
/* *applicable = 0 below T = exp(exp(18)); out is then left untouched. */
ZD_API zd_status zd_cheng_bound(zd_context* ctx, const char* sigma, const char* T, int* applicable, zd_number* out);

typedef struct zd_comparison zd_comparison;

ZD_API zd_status zd_compare(zd_context* ctx, const zd_coefficients* c, const char* const* T_list, size_t count,
                            zd_comparison** out);
ZD_API size_t zd_comparison_rows(const zd_comparison* cmp);
/* Columns: "this", "rosser_half", "trudgian_half", "ramare", "cheng".
 * Sets *applicable; when 0, *reason explains and out is untouched. */
ZD_API zd_status zd_comparison_cell(const zd_comparison* cmp, size_t row, const char* column, int* applicable,
                                    zd_number* out, const char** reason);
ZD_API zd_status zd_comparison_T(const zd_comparison* cmp, size_t row, zd_number* out);
ZD_API void zd_comparison_destroy(zd_comparison* cmp);

/* ------------------------------------------------------------ verification */

typedef struct zd_report zd_report;

/* |zeta(s) - sum_{n<t} n^-s| <= c0 t^-sigma over sigmas x (t_count points
 * log-spaced in [t_lo, t_hi]). constant = NULL uses the rounded c0. */
ZD_API zd_status zd_verify_approx(zd_context* ctx, const double* sigmas, size_t sigma_count, double t_lo,
                                  double t_hi, int t_count, const char* constant, zd_report** out);

typedef struct zd_small_t_grid {
  double sigma_min, sigma_max, sigma_step;
  double t_min, t_max, t_step;
  double constant;
} zd_small_t_grid;

/* grid = NULL uses sigma 0.5..2 step 0.05, t 0.01..15 step 0.01, constant 43. */
ZD_API zd_status zd_verify_small_t(zd_context* ctx, const zd_small_t_grid* grid, zd_report** out);

/* count points with Re s uniform on [-eta, 1+eta] and Im s log-uniform on
 * [t_lo, t_hi], drawn from mt19937_64(seed). Uses the context's eta. */
ZD_API zd_status zd_verify_rademacher(zd_context* ctx, int count, uint64_t seed, double t_lo, double t_hi,
                                      zd_report** out);

ZD_API double zd_report_worst_ratio(const zd_report* r);
ZD_API void zd_report_witness(const zd_report* r, double* sigma, double* t);
ZD_API uint64_t zd_report_points(const zd_report* r);
ZD_API int zd_report_passed(const zd_report* r);
ZD_API void zd_report_destroy(zd_report* r);

/* ------------------------------------------------------------------ table */

typedef struct zd_table zd_table;

/* sigmas = NULL (or count 0) regenerates all 28 rows; otherwise the listed
 * rows ("0.85"). scan_cells != 0 adds the rounding-cell scan for rows
 * outside tolerance. */
ZD_API zd_status zd_table1(zd_context* ctx, const char* const* sigmas, size_t count, int scan_cells,
                           zd_table** out);
ZD_API size_t zd_table_rows(const zd_table* t);
/* Keys: sigma sigma0 H, pub_b1 pub_b2 pub_b3 pub_c3, b1 b2 b3 c3 (formatted
 * as published), b1_value b2_value b3_value c3_value (full precision),
 * d_b1 d_b2 d_b3 d_c3 (deviation in last published units), within ("1"/"0"),
 * scan_points scan_hits scan_first scan_last (empty without a scan). */
ZD_API zd_status zd_table_text(const zd_table* t, size_t row, const char* key, const char** text);
ZD_API int zd_table_row_within(const zd_table* t, size_t row);
ZD_API int zd_table_all_within(const zd_table* t);
ZD_API void zd_table_destroy(zd_table* t);

/* -------------------------------------------------------------- optimizer */

typedef enum zd_objective { ZD_MINIMIZE_B1 = 0, ZD_MINIMIZE_BOUND_AT_T = 1 } zd_objective;

/* NULL fields take defaults: sigma0 in (0.5208, min(sigma, 0.9723)),
 * H in [1e3, H_rh), tolerances 1e-6 and 1, grid 40, T = H_rh. */
typedef struct zd_optimize_spec {
  const char* sigma;
  zd_objective objective;
  const char* T;
  const char* sigma0_lo;
  const char* sigma0_hi;
  const char* H_lo;
  const char* H_hi;
  const char* sigma0_tolerance;
  const char* H_tolerance;
  int grid_size; /* 0 = default */
} zd_optimize_spec;

typedef struct zd_optimization zd_optimization;

ZD_API zd_status zd_optimize(zd_context* ctx, const zd_optimize_spec* spec, zd_optimization** out);
/* Keys: sigma0_star H_star objective. */
ZD_API zd_status zd_optimization_get(const zd_optimization* o, const char* key, zd_number* out);
/* Borrowed; owned by the optimization handle. */
ZD_API const zd_coefficients* zd_optimization_coefficients(const zd_optimization* o);
ZD_API size_t zd_optimization_trace_size(const zd_optimization* o);
ZD_API zd_status zd_optimization_trace_point(const zd_optimization* o, size_t i, double* sigma0, double* H,
                                             double* objective);
ZD_API void zd_optimization_destroy(zd_optimization* o);

#ifdef __cplusplus
}
#endif

#endif /* ZDENSITY_ZDENSITY_H */
