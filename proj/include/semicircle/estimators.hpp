#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semicircle/eigensolver.hpp"

namespace semicircle {

/// A smoothing kernel K together with its distribution function.
struct KernelSpec {
  std::string name;
  std::function<double(double)> pdf;
  std::function<double(double)> cdf;
  bool satisfies_a26 = false;  // K >= 0 and integrates to 1
  bool satisfies_a27 = false;  // integral of |K'| is finite
};

/// Standard normal density; cdf through erfc.
const KernelSpec& gaussian_kernel();
/// (pi (1 + x^2))^{-1}; cdf 1/2 + arctan(x)/pi.
const KernelSpec& cauchy_kernel();
/// "gaussian" or "cauchy", otherwise ConfigError.
const KernelSpec& kernel_by_name(std::string_view name);

/// Builds a user kernel and checks the normalization and total-variation
/// conditions by quadrature. Throws ConfigError if K is negative somewhere on
/// the probe grid or does not integrate to 1 within 1e-8.
KernelSpec make_kernel(std::string name, std::function<double(double)> pdf,
                       std::function<double(double)> cdf);

/// n^{-2/5}. Throws DomainError for n < 2.
double bandwidth_default(std::size_t n);

/// f_n(x) = (p h)^{-1} sum_i K((x - mu_i)/h)
double kde_at(const Spectrum& spec, const KernelSpec& kernel, double h, double x);
/// F_n(x) = p^{-1} sum_i Kcdf((x - mu_i)/h), the exact antiderivative of kde_at.
double kcdf_at(const Spectrum& spec, const KernelSpec& kernel, double h, double x);
/// Fraction of eigenvalues <= x.
double esd_at(const Spectrum& spec, double x);

double semicircle_pdf(double x);
double semicircle_cdf(double x);

enum class CurveKind { kde, kcdf, esd, semicircle_pdf, semicircle_cdf };

std::string_view curve_kind_name(CurveKind kind) noexcept;

struct CurveMeta {
  CurveKind kind = CurveKind::kde;
  std::size_t n = 0;
  std::optional<double> h;
  std::string kernel;
  std::optional<std::uint64_t> seed;
};

struct EstimatorCurve {
  std::vector<double> grid;
  std::vector<double> values;
  CurveMeta meta;
};

/// Evaluates the point operation matching `kind` on a strictly increasing grid.
/// The semicircle kinds ignore `spec`, `kernel` and `h`; esd ignores `kernel` and `h`.
EstimatorCurve curve(CurveKind kind, const Spectrum& spec, const KernelSpec& kernel, double h,
                     std::span<const double> grid, std::optional<std::uint64_t> seed = {});

/// semicircle_pdf or semicircle_cdf over `grid`.
EstimatorCurve reference_curve(CurveKind kind, std::span<const double> grid);

/// lo, lo + step, ..., hi with `points` entries (points >= 2).
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

}  // namespace semicircle
