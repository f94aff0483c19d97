#include "semicircle/estimators.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "semicircle/error.hpp"

namespace semicircle {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;

void check_inputs(const Spectrum& spec, double h) {
  if (!(h > 0.0)) {
    std::ostringstream os;
    os << "bandwidth must be > 0, got " << h;
    throw DomainError(os.str());
  }
  if (spec.empty()) throw DomainError("spectrum is empty");
}

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DomainError("curve grid must be strictly increasing");
}

// Sum of |K(x_{i+1}) - K(x_i)| on a uniform grid over [-span, span].
double total_variation(const std::function<double(double)>& pdf, double span, std::size_t steps) {
  double tv = 0.0;
  double prev = pdf(-span);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double x = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(steps);
    const double cur = pdf(x);
    tv += std::abs(cur - prev);
    prev = cur;
  }
  return tv;
}

}  // namespace

const KernelSpec& gaussian_kernel() {
  static const KernelSpec k{
      "gaussian",
      [](double x) { return std::exp(-0.5 * x * x) * kInvSqrt2Pi; },
      [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); },
      true,
      true,
  };
  return k;
}

const KernelSpec& cauchy_kernel() {
  static const KernelSpec k{
      "cauchy",
      [](double x) { return std::numbers::inv_pi / (1.0 + x * x); },
      // atan2(1, -x)/pi == 1/2 + atan(x)/pi without cancellation in the left tail.
      [](double x) { return std::atan2(1.0, -x) * std::numbers::inv_pi; },
      true,
      true,
  };
  return k;
}

const KernelSpec& kernel_by_name(std::string_view name) {
  if (name == "gaussian") return gaussian_kernel();
  if (name == "cauchy") return cauchy_kernel();
  throw ConfigError("unknown kernel '" + std::string(name) + "' (expected gaussian or cauchy)");
}

KernelSpec make_kernel(std::string name, std::function<double(double)> pdf,
                       std::function<double(double)> cdf) {
  if (!pdf || !cdf) throw ConfigError("kernel '" + name + "' must declare both pdf and cdf");
  for (int i = -4000; i <= 4000; ++i) {
    const double x = i * 0.005;
    if (!(pdf(x) >= 0.0)) {
      std::ostringstream os;
      os << "kernel '" << name << "' is negative at x=" << x;
      throw ConfigError(os.str());
    }
  }
  using boost::math::quadrature::gauss_kronrod;
  const double inf = std::numeric_limits<double>::infinity();
  const double mass = gauss_kronrod<double, 61>::integrate(pdf, -inf, inf, 15, 1e-12);
  if (!(std::abs(mass - 1.0) <= 1e-8)) {
    std::ostringstream os;
    os.precision(12);
    os << "kernel '" << name << "' integrates to " << mass << ", not 1";
    throw ConfigError(os.str());
  }
  const double tv1 = total_variation(pdf, 1e3, 200000);
  const double tv2 = total_variation(pdf, 1e3, 400000);
  const bool bounded_variation = std::isfinite(tv2) && std::abs(tv2 - tv1) <= 1e-3 * (1.0 + tv1);
  return {std::move(name), std::move(pdf), std::move(cdf), true, bounded_variation};
}

double bandwidth_default(std::size_t n) {
  if (n < 2) throw DomainError("bandwidth_default: n must be >= 2, got " + std::to_string(n));
  return std::pow(static_cast<double>(n), -0.4);
}

double kde_at(const Spectrum& spec, const KernelSpec& kernel, double h, double x) {
  check_inputs(spec, h);
  double sum = 0.0;
  for (double mu : spec.eigenvalues()) sum += kernel.pdf((x - mu) / h);
  return sum / (static_cast<double>(spec.size()) * h);
}

double kcdf_at(const Spectrum& spec, const KernelSpec& kernel, double h, double x) {
  check_inputs(spec, h);
  double sum = 0.0;
  for (double mu : spec.eigenvalues()) sum += kernel.cdf((x - mu) / h);
  return std::clamp(sum / static_cast<double>(spec.size()), 0.0, 1.0);
}

double esd_at(const Spectrum& spec, double x) {
  if (spec.empty()) throw DomainError("spectrum is empty");
  const auto& v = spec.eigenvalues();
  const auto count = std::upper_bound(v.begin(), v.end(), x) - v.begin();
  return static_cast<double>(count) / static_cast<double>(v.size());
}

double semicircle_pdf(double x) {
  if (!(std::abs(x) < 2.0)) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  const double v = 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) +
                   std::asin(0.5 * x) / std::numbers::pi;
  return std::clamp(v, 0.0, 1.0);
}

std::string_view curve_kind_name(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::kde: return "kde";
    case CurveKind::kcdf: return "kcdf";
    case CurveKind::esd: return "esd";
    case CurveKind::semicircle_pdf: return "semicircle_pdf";
    case CurveKind::semicircle_cdf: return "semicircle_cdf";
  }
  return "unknown";
}

EstimatorCurve curve(CurveKind kind, const Spectrum& spec, const KernelSpec& kernel, double h,
                     std::span<const double> grid, std::optional<std::uint64_t> seed) {
  check_grid(grid);
  EstimatorCurve c;
  c.grid.assign(grid.begin(), grid.end());
  c.values.reserve(grid.size());
  c.meta.kind = kind;
  c.meta.n = spec.source_n();
  c.meta.seed = seed;
  switch (kind) {
    case CurveKind::kde:
      c.meta.h = h;
      c.meta.kernel = kernel.name;
      for (double x : grid) c.values.push_back(kde_at(spec, kernel, h, x));
      break;
    case CurveKind::kcdf:
      c.meta.h = h;
      c.meta.kernel = kernel.name;
      for (double x : grid) c.values.push_back(kcdf_at(spec, kernel, h, x));
      break;
    case CurveKind::esd:
      for (double x : grid) c.values.push_back(esd_at(spec, x));
      break;
    case CurveKind::semicircle_pdf:
    case CurveKind::semicircle_cdf:
      return reference_curve(kind, grid);
  }
  return c;
}

EstimatorCurve reference_curve(CurveKind kind, std::span<const double> grid) {
  if (kind != CurveKind::semicircle_pdf && kind != CurveKind::semicircle_cdf)
    throw DomainError("reference_curve: kind must be semicircle_pdf or semicircle_cdf");
  check_grid(grid);
  EstimatorCurve c;
  c.grid.assign(grid.begin(), grid.end());
  c.meta.kind = kind;
  for (double x : grid)
    c.values.push_back(kind == CurveKind::semicircle_pdf ? semicircle_pdf(x) : semicircle_cdf(x));
  return c;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  if (points < 2 || !(lo < hi)) throw DomainError("linear_grid: need lo < hi and points >= 2");
  std::vector<double> g(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

}  // namespace semicircle
