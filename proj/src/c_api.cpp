#include "semicircle/semicircle.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "semicircle/eigensolver.hpp"
#include "semicircle/ensembles.hpp"
#include "semicircle/error.hpp"
#include "semicircle/estimators.hpp"
#include "semicircle/experiment.hpp"
#include "semicircle/io.hpp"
#include "semicircle/metrics.hpp"
#include "semicircle/reductions.hpp"
#include "semicircle/transforms.hpp"

struct sc_distribution {
  semicircle::EntryDistribution dist;
};
struct sc_matrix {
  semicircle::SymmetricMatrix m;
};
struct sc_spectrum {
  semicircle::Spectrum s;
};

namespace {

thread_local std::string g_last_error;

sc_status status_of(semicircle::ErrorKind kind) {
  using semicircle::ErrorKind;
  switch (kind) {
    case ErrorKind::config: return SC_ERR_CONFIG;
    case ErrorKind::domain: return SC_ERR_DOMAIN;
    case ErrorKind::numeric: return SC_ERR_NUMERIC;
    case ErrorKind::parse: return SC_ERR_PARSE;
    case ErrorKind::io: return SC_ERR_IO;
    case ErrorKind::tolerance: return SC_ERR_TOLERANCE;
  }
  return SC_ERR_INTERNAL;
}

sc_status fail(sc_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
sc_status guarded(F&& body) {
  try {
    body();
    return SC_OK;
  } catch (const semicircle::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SC_ERR_INTERNAL, "unknown error");
  }
}

#define SC_REQUIRE(cond)                                                        \
  do {                                                                          \
    if (!(cond)) return fail(SC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

const semicircle::KernelSpec* kernel_of(sc_kernel k) {
  switch (k) {
    case SC_KERNEL_GAUSSIAN: return &semicircle::gaussian_kernel();
    case SC_KERNEL_CAUCHY: return &semicircle::cauchy_kernel();
  }
  return nullptr;
}

std::string path_or_stdout(const char* path) { return path ? path : "-"; }

}  // namespace

extern "C" {

const char* sc_version(void) { return "0.1.0"; }

const char* sc_last_error(void) { return g_last_error.c_str(); }

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SC_ERR_CONFIG: return "configuration error";
    case SC_ERR_DOMAIN: return "domain error";
    case SC_ERR_NUMERIC: return "numeric error";
    case SC_ERR_PARSE: return "parse error";
    case SC_ERR_IO: return "i/o error";
    case SC_ERR_TOLERANCE: return "tolerance breach";
    case SC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

sc_status sc_distribution_create(const char* name, sc_distribution** out) {
  SC_REQUIRE(name && out);
  return guarded([&] { *out = new sc_distribution{semicircle::EntryDistribution::from_name(name)}; });
}

void sc_distribution_destroy(sc_distribution* dist) { delete dist; }

const char* sc_distribution_name(const sc_distribution* dist) {
  return dist ? dist->dist.name().data() : "";
}

sc_status sc_distribution_variance(const sc_distribution* dist, int* has_variance,
                                   double* variance) {
  SC_REQUIRE(dist && has_variance);
  const auto v = dist->dist.analytic_variance();
  *has_variance = v ? 1 : 0;
  if (v && variance) *variance = *v;
  return SC_OK;
}

sc_status sc_sample_entries(const sc_distribution* dist, size_t count, uint64_t seed, double* out) {
  SC_REQUIRE(dist && out);
  return guarded([&] {
    const auto v = semicircle::sample_entries(dist->dist, count, seed);
    std::copy(v.begin(), v.end(), out);
  });
}

sc_status sc_truncated_second_moment(const sc_distribution* dist, double x, double* out) {
  SC_REQUIRE(dist && out);
  return guarded([&] { *out = semicircle::truncated_second_moment(dist->dist, x); });
}

sc_status sc_scaling_constant(const sc_distribution* dist, size_t n, double* b_n) {
  SC_REQUIRE(dist && b_n);
  return guarded([&] { *b_n = semicircle::scaling_constant(dist->dist, n).b_n; });
}

sc_status sc_tail_diagnostic(const sc_distribution* dist, const double* x_grid, size_t count,
                             double* ratios) {
  SC_REQUIRE(dist && (count == 0 || (x_grid && ratios)));
  return guarded([&] {
    const auto rows = semicircle::tail_diagnostic(dist->dist, {x_grid, count});
    for (std::size_t i = 0; i < rows.size(); ++i) ratios[i] = rows[i].ratio;
  });
}

sc_status sc_wigner_build(const sc_distribution* dist, size_t n, uint64_t seed, sc_matrix** out,
                          double* b_n) {
  SC_REQUIRE(dist && out);
  return guarded([&] {
    auto w = semicircle::build_wigner(dist->dist, n, seed);
    if (b_n) *b_n = w.scaling.b_n;
    *out = new sc_matrix{std::move(w.matrix)};
  });
}

sc_status sc_raw_entries_build(const sc_distribution* dist, size_t n, uint64_t seed,
                               sc_matrix** out) {
  SC_REQUIRE(dist && out);
  return guarded([&] { *out = new sc_matrix{semicircle::build_raw_entries(dist->dist, n, seed)}; });
}

sc_status sc_matrix_create(size_t n, const double* row_major, sc_matrix** out) {
  SC_REQUIRE(out && (n == 0 || row_major));
  return guarded([&] {
    std::vector<double> v(row_major, row_major + n * n);
    *out = new sc_matrix{semicircle::SymmetricMatrix(n, std::move(v))};
  });
}

void sc_matrix_destroy(sc_matrix* m) { delete m; }

size_t sc_matrix_size(const sc_matrix* m) { return m ? m->m.size() : 0; }

sc_status sc_matrix_values(const sc_matrix* m, double* out) {
  SC_REQUIRE(m && out);
  std::copy(m->m.data().begin(), m->m.data().end(), out);
  return SC_OK;
}

sc_status sc_matrix_write_csv(const sc_matrix* m, const char* path) {
  SC_REQUIRE(m);
  return guarded([&] {
    semicircle::write_text(path_or_stdout(path), semicircle::to_csv(semicircle::matrix_table(m->m)));
  });
}

sc_status sc_matrix_zero_diagonal(const sc_matrix* m, sc_matrix** out) {
  SC_REQUIRE(m && out);
  return guarded([&] { *out = new sc_matrix{semicircle::zero_diagonal(m->m)}; });
}

sc_status sc_matrix_truncate(const sc_matrix* raw, double b_n, sc_matrix** out) {
  SC_REQUIRE(raw && out);
  return guarded([&] { *out = new sc_matrix{semicircle::truncate_entries(raw->m, b_n)}; });
}

sc_status sc_matrix_center_and_rescale(const sc_matrix* truncated_raw, const sc_distribution* dist,
                                       double b_n, size_t n, sc_matrix** out) {
  SC_REQUIRE(truncated_raw && dist && out);
  return guarded([&] {
    *out = new sc_matrix{semicircle::center_and_rescale(truncated_raw->m, dist->dist, b_n, n)};
  });
}

sc_status sc_lindeberg_diagnostic(const sc_distribution* dist, size_t n, double eta,
                                  size_t mc_samples, uint64_t seed, double* out) {
  SC_REQUIRE(dist && out);
  return guarded(
      [&] { *out = semicircle::lindeberg_diagnostic(dist->dist, n, eta, mc_samples, seed); });
}

sc_status sc_spectrum_compute(const sc_matrix* m, sc_spectrum** out) {
  SC_REQUIRE(m && out);
  return guarded([&] { *out = new sc_spectrum{semicircle::symmetric_eigenvalues(m->m)}; });
}

sc_status sc_spectrum_create(const double* values, size_t count, sc_spectrum** out) {
  SC_REQUIRE(out && (count == 0 || values));
  return guarded([&] {
    if (count == 0) throw semicircle::DomainError("spectrum must not be empty");
    *out = new sc_spectrum{semicircle::Spectrum(std::vector<double>(values, values + count))};
  });
}

sc_status sc_spectrum_read_csv(const char* path, sc_spectrum** out) {
  SC_REQUIRE(path && out);
  return guarded([&] { *out = new sc_spectrum{semicircle::read_spectrum_csv(path)}; });
}

sc_status sc_spectrum_write_csv(const sc_spectrum* spec, const char* path) {
  SC_REQUIRE(spec);
  return guarded([&] {
    semicircle::write_text(path_or_stdout(path),
                           semicircle::to_csv(semicircle::spectrum_table(spec->s)));
  });
}

void sc_spectrum_destroy(sc_spectrum* spec) { delete spec; }

size_t sc_spectrum_size(const sc_spectrum* spec) { return spec ? spec->s.size() : 0; }

sc_status sc_spectrum_values(const sc_spectrum* spec, double* out) {
  SC_REQUIRE(spec && out);
  std::copy(spec->s.eigenvalues().begin(), spec->s.eigenvalues().end(), out);
  return SC_OK;
}

sc_status sc_bandwidth_default(size_t n, double* h) {
  SC_REQUIRE(h);
  return guarded([&] { *h = semicircle::bandwidth_default(n); });
}

sc_status sc_kde_at(const sc_spectrum* spec, sc_kernel kernel, double h, double x, double* out) {
  SC_REQUIRE(spec && out);
  const auto* k = kernel_of(kernel);
  if (!k) return fail(SC_ERR_INVALID_ARGUMENT, "unknown kernel id");
  return guarded([&] { *out = semicircle::kde_at(spec->s, *k, h, x); });
}

sc_status sc_kcdf_at(const sc_spectrum* spec, sc_kernel kernel, double h, double x, double* out) {
  SC_REQUIRE(spec && out);
  const auto* k = kernel_of(kernel);
  if (!k) return fail(SC_ERR_INVALID_ARGUMENT, "unknown kernel id");
  return guarded([&] { *out = semicircle::kcdf_at(spec->s, *k, h, x); });
}

sc_status sc_esd_at(const sc_spectrum* spec, double x, double* out) {
  SC_REQUIRE(spec && out);
  return guarded([&] { *out = semicircle::esd_at(spec->s, x); });
}

double sc_semicircle_pdf(double x) { return semicircle::semicircle_pdf(x); }
double sc_semicircle_cdf(double x) { return semicircle::semicircle_cdf(x); }

sc_status sc_stieltjes_esd(const sc_spectrum* spec, double re, double im, double* out_re,
                           double* out_im) {
  SC_REQUIRE(spec && out_re && out_im);
  return guarded([&] {
    const auto m = semicircle::stieltjes_esd(spec->s, semicircle::ComplexPoint(re, im));
    *out_re = m.real();
    *out_im = m.imag();
  });
}

sc_status sc_stieltjes_semicircle(double re, double im, double* out_re, double* out_im) {
  SC_REQUIRE(out_re && out_im);
  return guarded([&] {
    const auto s = semicircle::stieltjes_semicircle(semicircle::ComplexPoint(re, im));
    *out_re = s.real();
    *out_im = s.imag();
  });
}

sc_status sc_identity_check(const sc_spectrum* spec, double h, const double* x_grid, size_t count,
                            double* max_difference) {
  SC_REQUIRE(spec && max_difference && (count == 0 || x_grid));
  return guarded([&] {
    *max_difference = semicircle::cauchy_identity_max_difference(spec->s, h, {x_grid, count});
    if (!(*max_difference <= 1e-12))
      throw semicircle::ToleranceError("cauchy identity: max difference " +
                                       semicircle::format_double(*max_difference) +
                                       " exceeds 1e-12");
  });
}

sc_status sc_kolmogorov_semicircle(const sc_spectrum* spec, double* out) {
  SC_REQUIRE(spec && out);
  return guarded([&] { *out = semicircle::kolmogorov_distance(spec->s, semicircle::semicircle_cdf); });
}

sc_status sc_kolmogorov_spectra(const sc_spectrum* a, const sc_spectrum* b, double* out) {
  SC_REQUIRE(a && b && out);
  return guarded([&] { *out = semicircle::kolmogorov_distance(a->s, b->s); });
}

sc_status sc_levy_spectra(const sc_spectrum* a, const sc_spectrum* b, double tolerance,
                          double* out) {
  SC_REQUIRE(a && b && out);
  return guarded([&] { *out = semicircle::levy_distance(a->s, b->s, tolerance); });
}

sc_status sc_levy_cube_trace_bound(const sc_matrix* a, const sc_matrix* b, double* lhs,
                                   double* rhs, int* holds) {
  SC_REQUIRE(a && b && lhs && rhs && holds);
  return guarded([&] {
    const auto r = semicircle::levy_cube_trace_bound(a->m, b->m);
    *lhs = r.lhs;
    *rhs = r.rhs;
    *holds = r.holds ? 1 : 0;
  });
}

sc_status sc_rank_inequality_check(const sc_matrix* a, const sc_matrix* b, size_t rank_bound,
                                   double* sup_diff, double* bound, int* holds) {
  SC_REQUIRE(a && b && sup_diff && bound && holds);
  return guarded([&] {
    const auto r = semicircle::rank_inequality_check(a->m, b->m, rank_bound);
    *sup_diff = r.sup_diff;
    *bound = r.bound;
    *holds = r.holds ? 1 : 0;
  });
}

sc_status sc_run_spectrum(const char* distribution, size_t n, uint64_t seed, const char* path,
                          const char* matrix_path) {
  SC_REQUIRE(distribution);
  return guarded([&] {
    const auto run =
        semicircle::run_spectrum(semicircle::EntryDistribution::from_name(distribution), n, seed);
    semicircle::write_text(path_or_stdout(path), semicircle::to_csv(run.table));
    if (matrix_path)
      semicircle::write_text(matrix_path, semicircle::to_csv(semicircle::matrix_table(run.matrix)));
  });
}

sc_status sc_run_figure(int figure, uint64_t seed, const char* path) {
  return guarded([&] {
    const auto fd = semicircle::run_figure(figure, seed);
    semicircle::write_text(path_or_stdout(path), semicircle::to_csv(fd.table));
  });
}

void sc_convergence_config_init(sc_convergence_config* config) {
  static const size_t kSizes[] = {50, 200, 800};
  if (!config) return;
  config->distribution = "standard_normal";
  config->sizes = kSizes;
  config->size_count = 3;
  config->kernel = "gaussian";
  config->bandwidth = 0.0;
  config->grid_lo = -3.0;
  config->grid_hi = 3.0;
  config->grid_points = 601;
  config->replicates = 20;
  config->base_seed = 1;
  config->threads = 0;
}

sc_status sc_run_convergence(const sc_convergence_config* config, const char* path) {
  SC_REQUIRE(config && config->distribution && config->kernel &&
             (config->size_count == 0 || config->sizes));
  return guarded([&] {
    semicircle::ExperimentConfig c;
    c.distribution = config->distribution;
    c.sizes.assign(config->sizes, config->sizes + config->size_count);
    c.kernel = config->kernel;
    if (config->bandwidth > 0.0) c.bandwidth.fixed = config->bandwidth;
    c.grid = {config->grid_lo, config->grid_hi, config->grid_points};
    c.replicates = config->replicates;
    c.base_seed = config->base_seed;
    c.threads = config->threads;
    const auto result = semicircle::run_convergence(c);
    semicircle::write_text(path_or_stdout(path), semicircle::to_csv(result.table));
  });
}

}  // extern "C"
