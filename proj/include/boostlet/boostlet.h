/* boostlet: space-time boost-dilation transform library, C interface.
 *
 * All functions return bsl_status (BSL_OK on success) unless stated
 * otherwise; the message for the last failing call on the current thread is
 * available through bsl_last_error(). Objects returned through ** out
 * parameters are owned by the caller and released with the matching _free.
 * All operations are pure with respect to their handle arguments, so handles
 * may be shared across threads.
 */
#ifndef BOOSTLET_H
#define BOOSTLET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bsl_status {
    BSL_OK = 0,
    BSL_ERR_INVALID = 1,
    BSL_ERR_IO = 2,
    BSL_ERR_ALIASING = 3,
    BSL_ERR_DEGENERATE = 4,
    BSL_ERR_SHAPE = 5,
    BSL_ERR_DIVERGENCE = 6,
    BSL_ERR_INTERNAL = 7
} bsl_status;

typedef enum bsl_cone { BSL_CONE_SUPERSONIC = 0, BSL_CONE_SUBSONIC = 1 } bsl_cone;

/* Uniform sampling of [-extent, extent) per axis; counts must be powers of
 * two >= 8. */
typedef struct bsl_grid {
    int32_t n_s;
    int32_t n_t;
    double extent_s;
    double extent_t;
} bsl_grid;

/* (c, alpha) integration box: c on a logarithmic lattice, alpha uniform. */
typedef struct bsl_quad {
    double c_min;
    double c_max;
    double alpha_min;
    double alpha_max;
    int32_t n_c;
    int32_t n_alpha;
} bsl_quad;

/* Axis-aligned rectangle [lo1,hi1] x [lo2,hi2] (tau plane or frequency
 * plane depending on use). */
typedef struct bsl_rect {
    double lo1, hi1;
    double lo2, hi2;
} bsl_rect;

typedef struct bsl_field bsl_field;
typedef struct bsl_mother bsl_mother;
typedef struct bsl_coeffs bsl_coeffs;
typedef struct bsl_admissibility bsl_admissibility;

/* Defaults shared by the command-line tool and the test suites. */
#define BSL_DEFAULT_GRID_N 128
#define BSL_DEFAULT_EXTENT 8.0
#define BSL_DEFAULT_SCALE_CENTER 1.4
#define BSL_DEFAULT_SCALE_WIDTH 0.4
#define BSL_DEFAULT_RAPIDITY_WIDTH 0.5
#define BSL_DEFAULT_QUAD_N 64
#define BSL_DEFAULT_OMEGA_SAMPLES 32
#define BSL_DEFAULT_SPREAD_THRESHOLD 0.01
#define BSL_DEFAULT_SEED 1729u

const char* bsl_version(void);
const char* bsl_last_error(void);

/* ---- fields ---------------------------------------------------------- */

/* data: interleaved re,im pairs, n_s*n_t samples row-major with s outer;
 * NULL creates a zero field. */
bsl_status bsl_field_create(bsl_grid grid, const double* data, bsl_field** out);
void bsl_field_free(bsl_field* f);
bsl_status bsl_field_get_grid(const bsl_field* f, bsl_grid* out);
/* Pointer to the interleaved samples; valid while the field lives. */
const double* bsl_field_data(const bsl_field* f);
bsl_status bsl_field_l2_norm(const bsl_field* f, double* out);

bsl_status bsl_field_read_bsf(const char* path, bsl_field** out);
bsl_status bsl_field_write_bsf(const bsl_field* f, const char* path);
/* 8-bit PGM of the magnitude plus a "<path>.meta" sidecar with the mapping
 * endpoints. */
bsl_status bsl_field_write_pgm(const bsl_field* f, const char* path);

/* Deterministic cone-band-limited test signal (splitmix64 over seed/index). */
bsl_status bsl_field_suite_signal(bsl_grid grid, const bsl_mother* m, uint64_t seed,
                                  int32_t index, bsl_field** out);

/* ---- analyzing windows ----------------------------------------------- */

bsl_status bsl_mother_create(bsl_grid grid, bsl_cone cone, double scale_center,
                             double scale_width, double rapidity_width, bsl_mother** out);
void bsl_mother_free(bsl_mother* m);
bsl_status bsl_mother_norm(const bsl_mother* m, double* out);
/* Integration box covering the window's support plus margin. */
bsl_status bsl_mother_default_quad(const bsl_mother* m, int32_t n_c, int32_t n_alpha,
                                   bsl_quad* out);
/* 2n doubles: (w_s, w_t) pairs spread over the cone interior. */
bsl_status bsl_mother_default_omegas(const bsl_mother* m, int32_t n, double* out_pairs);

/* ---- transform -------------------------------------------------------- */

/* out_pair: re1, im1, re2, im2. tau need not be grid-aligned. */
bsl_status bsl_cbt_point(const bsl_field* f, const bsl_mother* m, double c, double alpha,
                         double tau_s, double tau_t, double out_pair[4]);
bsl_status bsl_cbt_slice(const bsl_field* f, const bsl_mother* m, double c, double alpha,
                         bsl_coeffs** out);
bsl_status bsl_convolution_form(const bsl_field* f, const bsl_mother* m, double c, double alpha,
                                bsl_coeffs** out);
bsl_status bsl_atom(const bsl_mother* m, double c, double alpha, double tau_s, double tau_t,
                    bsl_field** out);
void bsl_coeffs_free(bsl_coeffs* c);
/* component 1 or 2; the returned field is an independent copy. */
bsl_status bsl_coeffs_plane(const bsl_coeffs* c, int32_t component, bsl_field** out);

/* ---- admissibility ----------------------------------------------------- */

bsl_status bsl_admissibility_run(const bsl_mother* m, const double* omega_pairs, int32_t n,
                                 bsl_quad quad, bsl_admissibility** out);
void bsl_admissibility_free(bsl_admissibility* a);
double bsl_admissibility_delta(const bsl_admissibility* a);
double bsl_admissibility_spread(const bsl_admissibility* a);
int32_t bsl_admissibility_admissible(const bsl_admissibility* a);
int32_t bsl_admissibility_resolution_warning(const bsl_admissibility* a);
/* Per-sample integrals; each array holds n entries (may be NULL). */
bsl_status bsl_admissibility_samples(const bsl_admissibility* a, double* delta_phi,
                                     double* delta_phi_star);

/* ---- uncertainty reports ----------------------------------------------- */

typedef struct bsl_report {
    char name[32];
    double p_or_lambda; /* NaN when not applicable */
    double lhs;
    double rhs;
    double ratio;
    int32_t satisfied; /* 1 holds, 0 violated, -1 not applicable */
    int32_t divergence_warning;
    int32_t truncation_warning;
    char quadrature_id[96];
} bsl_report;

typedef struct bsl_uncertainty_params {
    const double* p_values; /* Lp reports; p <= 2 variant (i), p >= 2 variant (ii) */
    int32_t n_p;
    const double* lambda_values; /* weighted-norm reports, 0 <= lambda < 2 */
    int32_t n_lambda;
    const bsl_rect* a1; /* both NULL or both set */
    const bsl_rect* a2;
    int32_t include_heisenberg;
    int32_t include_log;
    int32_t first_component_only; /* |B|^2 convention switch, default 0 = both */
} bsl_uncertainty_params;

/* All requested reports from one sweep over the (c, alpha) lattice. */
bsl_status bsl_uncertainty_suite(const bsl_field* f, const bsl_mother* m,
                                 const bsl_admissibility* adm, bsl_quad quad,
                                 const bsl_uncertainty_params* params, bsl_report* out,
                                 int32_t max_reports, int32_t* n_out);

bsl_status bsl_heisenberg(const bsl_field* f, const bsl_mother* m, const bsl_admissibility* adm,
                          bsl_quad quad, bsl_report* out);
bsl_status bsl_lp_heisenberg_i(const bsl_field* f, const bsl_mother* m,
                               const bsl_admissibility* adm, bsl_quad quad, double p,
                               bsl_report* out);
bsl_status bsl_lp_heisenberg_ii(const bsl_field* f, const bsl_mother* m,
                                const bsl_admissibility* adm, bsl_quad quad, double p,
                                bsl_report* out);
bsl_status bsl_log_uncertainty(const bsl_field* f, const bsl_mother* m,
                               const bsl_admissibility* adm, bsl_quad quad, bsl_report* out);
bsl_status bsl_pitt(const bsl_field* f, const bsl_mother* m, const bsl_admissibility* adm,
                    bsl_quad quad, double lambda, bsl_report* out);
bsl_status bsl_nazarov(const bsl_field* f, const bsl_mother* m, const bsl_admissibility* adm,
                       bsl_quad quad, bsl_rect a1, bsl_rect a2, bsl_report* out);

/* "name,p_or_lambda,lhs,rhs,ratio,satisfied,quadrature_id" */
bsl_status bsl_report_csv_line(const bsl_report* r, char* buf, size_t bufsize);

double bsl_digamma_half(void);
bsl_status bsl_pitt_constant(double lambda, double* out);
bsl_status bsl_spectral_dispersion(const bsl_field* f, double exponent, double* out);

/* ---- closed-form example ----------------------------------------------- */

/* out_pair: re1, im1, re2, im2. */
bsl_status bsl_example_cbt(double c, double alpha, double tau_s, double tau_t, double epsilon,
                           double out_pair[4]);

/* ---- verification suite ------------------------------------------------- */

typedef struct bsl_verify_row {
    char name[48];
    double residual;
    double tolerance;
    int32_t pass;
    int32_t informational;
} bsl_verify_row;

bsl_status bsl_verify_run(bsl_grid grid, bsl_cone cone, double scale_center, double scale_width,
                          double rapidity_width, uint64_t seed, bsl_verify_row* rows,
                          int32_t max_rows, int32_t* n_rows);

#ifdef __cplusplus
}
#endif

#endif /* BOOSTLET_H */
