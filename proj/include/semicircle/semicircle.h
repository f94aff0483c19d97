/* C interface to the semicircle library.
 *
 * Objects are opaque handles created by *_create / *_compute functions and
 * released with the matching *_destroy. Every fallible call returns an
 * sc_status; on failure sc_last_error() describes the problem (the message is
 * per thread and stays valid until the next failing call on that thread).
 */
#ifndef SEMICIRCLE_SEMICIRCLE_H
#define SEMICIRCLE_SEMICIRCLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SC_BUILDING_LIBRARY)
#    define SC_API __declspec(dllexport)
#  else
#    define SC_API __declspec(dllimport)
#  endif
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1, /* null handle or output pointer */
  SC_ERR_CONFIG = 2,           /* unknown distribution/kernel, bad experiment parameters */
  SC_ERR_DOMAIN = 3,           /* argument outside an operation's domain */
  SC_ERR_NUMERIC = 4,          /* root not bracketed, eigensolver did not converge */
  SC_ERR_PARSE = 5,            /* malformed input file */
  SC_ERR_IO = 6,               /* file could not be read or written */
  SC_ERR_TOLERANCE = 7,        /* a checked identity exceeded its tolerance */
  SC_ERR_INTERNAL = 8
} sc_status;

typedef enum sc_kernel { SC_KERNEL_GAUSSIAN = 0, SC_KERNEL_CAUCHY = 1 } sc_kernel;

typedef struct sc_distribution sc_distribution;
typedef struct sc_matrix sc_matrix;
typedef struct sc_spectrum sc_spectrum;

SC_API const char* sc_version(void);
SC_API const char* sc_last_error(void);
SC_API const char* sc_status_name(sc_status status);

/* ---- entry distributions and Wigner matrices ---- */

/* name: shifted_exponential, shifted_poisson, standard_normal, log_tail_heavy */
SC_API sc_status sc_distribution_create(const char* name, sc_distribution** out);
SC_API void sc_distribution_destroy(sc_distribution* dist);
SC_API const char* sc_distribution_name(const sc_distribution* dist);
/* *has_variance = 0 for infinite variance; *variance is then left untouched. */
SC_API sc_status sc_distribution_variance(const sc_distribution* dist, int* has_variance,
                                          double* variance);

/* Writes `count` draws into out[0..count). */
SC_API sc_status sc_sample_entries(const sc_distribution* dist, size_t count, uint64_t seed,
                                   double* out);
SC_API sc_status sc_truncated_second_moment(const sc_distribution* dist, double x, double* out);
SC_API sc_status sc_scaling_constant(const sc_distribution* dist, size_t n, double* b_n);
/* ratios[i] = x^2 P(|X| > x) / l(x) at x = x_grid[i] */
SC_API sc_status sc_tail_diagnostic(const sc_distribution* dist, const double* x_grid,
                                    size_t count, double* ratios);

/* W_n = b_n^{-1}(X_jk); b_n may be NULL. */
SC_API sc_status sc_wigner_build(const sc_distribution* dist, size_t n, uint64_t seed,
                                 sc_matrix** out, double* b_n);
/* Unscaled (X_jk), same draw order as sc_wigner_build. */
SC_API sc_status sc_raw_entries_build(const sc_distribution* dist, size_t n, uint64_t seed,
                                      sc_matrix** out);

/* ---- matrices ---- */

/* Copies n*n row-major values; fails with SC_ERR_DOMAIN unless exactly symmetric. */
SC_API sc_status sc_matrix_create(size_t n, const double* row_major, sc_matrix** out);
SC_API void sc_matrix_destroy(sc_matrix* m);
SC_API size_t sc_matrix_size(const sc_matrix* m);
/* Copies n*n row-major values into out. */
SC_API sc_status sc_matrix_values(const sc_matrix* m, double* out);
/* Full dense CSV, one row per line. path "-" writes to stdout. */
SC_API sc_status sc_matrix_write_csv(const sc_matrix* m, const char* path);

SC_API sc_status sc_matrix_zero_diagonal(const sc_matrix* m, sc_matrix** out);
SC_API sc_status sc_matrix_truncate(const sc_matrix* raw, double b_n, sc_matrix** out);
SC_API sc_status sc_matrix_center_and_rescale(const sc_matrix* truncated_raw,
                                              const sc_distribution* dist, double b_n, size_t n,
                                              sc_matrix** out);
SC_API sc_status sc_lindeberg_diagnostic(const sc_distribution* dist, size_t n, double eta,
                                         size_t mc_samples, uint64_t seed, double* out);

/* ---- spectra ---- */

SC_API sc_status sc_spectrum_compute(const sc_matrix* m, sc_spectrum** out);
/* Sorts a copy of values[0..count). */
SC_API sc_status sc_spectrum_create(const double* values, size_t count, sc_spectrum** out);
SC_API sc_status sc_spectrum_read_csv(const char* path, sc_spectrum** out);
SC_API sc_status sc_spectrum_write_csv(const sc_spectrum* spec, const char* path);
SC_API void sc_spectrum_destroy(sc_spectrum* spec);
SC_API size_t sc_spectrum_size(const sc_spectrum* spec);
SC_API sc_status sc_spectrum_values(const sc_spectrum* spec, double* out);

/* ---- estimators and transforms ---- */

SC_API sc_status sc_bandwidth_default(size_t n, double* h);
SC_API sc_status sc_kde_at(const sc_spectrum* spec, sc_kernel kernel, double h, double x,
                           double* out);
SC_API sc_status sc_kcdf_at(const sc_spectrum* spec, sc_kernel kernel, double h, double x,
                            double* out);
SC_API sc_status sc_esd_at(const sc_spectrum* spec, double x, double* out);
SC_API double sc_semicircle_pdf(double x);
SC_API double sc_semicircle_cdf(double x);

SC_API sc_status sc_stieltjes_esd(const sc_spectrum* spec, double re, double im, double* out_re,
                                  double* out_im);
SC_API sc_status sc_stieltjes_semicircle(double re, double im, double* out_re, double* out_im);
/* Max |cauchy kde - Im m(x + ih)/pi| over x_grid; SC_ERR_TOLERANCE if above 1e-12
 * (max_difference is written either way). */
SC_API sc_status sc_identity_check(const sc_spectrum* spec, double h, const double* x_grid,
                                   size_t count, double* max_difference);

/* ---- metrics ---- */

SC_API sc_status sc_kolmogorov_semicircle(const sc_spectrum* spec, double* out);
SC_API sc_status sc_kolmogorov_spectra(const sc_spectrum* a, const sc_spectrum* b, double* out);
SC_API sc_status sc_levy_spectra(const sc_spectrum* a, const sc_spectrum* b, double tolerance,
                                 double* out);
SC_API sc_status sc_levy_cube_trace_bound(const sc_matrix* a, const sc_matrix* b, double* lhs,
                                          double* rhs, int* holds);
SC_API sc_status sc_rank_inequality_check(const sc_matrix* a, const sc_matrix* b,
                                          size_t rank_bound, double* sup_diff, double* bound,
                                          int* holds);

/* ---- experiment commands (CSV writers; path "-" is stdout) ---- */

SC_API sc_status sc_run_spectrum(const char* distribution, size_t n, uint64_t seed,
                                 const char* path, const char* matrix_path);
/* figure in 1..4; writes the CSV bundle for that figure to `path`. */
SC_API sc_status sc_run_figure(int figure, uint64_t seed, const char* path);

typedef struct sc_convergence_config {
  const char* distribution;
  const size_t* sizes;
  size_t size_count;
  const char* kernel;
  double bandwidth; /* <= 0: n^{-2/5} per size */
  double grid_lo;
  double grid_hi;
  size_t grid_points;
  size_t replicates;
  uint64_t base_seed;
  size_t threads; /* 0: hardware concurrency */
} sc_convergence_config;

/* Fills the defaults (standard_normal, sizes 50/200/800, gaussian, n^{-2/5}
 * bandwidth, [-3,3] x 601, 20 replicates, seed 1). */
SC_API void sc_convergence_config_init(sc_convergence_config* config);
SC_API sc_status sc_run_convergence(const sc_convergence_config* config, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* SEMICIRCLE_SEMICIRCLE_H */
