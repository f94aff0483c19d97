#include "semicircle/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "semicircle/error.hpp"
#include "semicircle/estimators.hpp"

namespace semicircle {

namespace {

// Fraction of `v` (sorted) that is <= x.
double step_at(const std::vector<double>& v, double x) {
  return static_cast<double>(std::upper_bound(v.begin(), v.end(), x) - v.begin()) /
         static_cast<double>(v.size());
}

void require_same_size(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.size() != b.size())
    throw DomainError("matrix size mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  if (a.size() == 0) throw DomainError("empty matrices");
}

// Largest |f - g| on [lo, hi] by golden-section search, assuming one peak.
double golden_peak(const Cdf& f, const Cdf& g, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498948482;
  auto gap = [&](double x) { return std::abs(f(x) - g(x)); };
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = gap(c), fd = gap(d);
  double best = std::max(fc, fd);
  for (int it = 0; it < 80 && b - a > 1e-13 * (1.0 + std::abs(a)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = gap(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = gap(d);
    }
    best = std::max({best, fc, fd});
  }
  return best;
}

}  // namespace

double kolmogorov_distance(const Spectrum& esd, const Cdf& g) {
  if (esd.empty()) throw DomainError("kolmogorov_distance: empty spectrum");
  const auto& v = esd.eigenvalues();
  const double p = static_cast<double>(v.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const double gv = g(v[i]);
    worst = std::max({worst, std::abs(static_cast<double>(j) / p - gv),
                      std::abs(static_cast<double>(i) / p - gv)});
    i = j;
  }
  return worst;
}

double kolmogorov_distance(const Spectrum& a, const Spectrum& b) {
  if (a.empty() || b.empty()) throw DomainError("kolmogorov_distance: empty spectrum");
  double worst = 0.0;
  for (const auto* s : {&a, &b})
    for (double t : s->eigenvalues())
      worst = std::max(worst, std::abs(step_at(a.eigenvalues(), t) - step_at(b.eigenvalues(), t)));
  return worst;
}

double kolmogorov_distance(const Cdf& f, const Cdf& g, std::span<const double> grid) {
  if (grid.empty()) throw DomainError("kolmogorov_distance: empty grid");
  std::size_t arg = 0;
  double worst = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = std::abs(f(grid[i]) - g(grid[i]));
    if (d > worst) {
      worst = d;
      arg = i;
    }
  }
  if (grid.size() >= 2) {
    const double lo = grid[arg == 0 ? 0 : arg - 1];
    const double hi = grid[arg + 1 < grid.size() ? arg + 1 : arg];
    if (hi > lo) worst = std::max(worst, golden_peak(f, g, lo, hi));
  }
  return worst;
}

double levy_distance(const Cdf& f, const Cdf& g, std::span<const double> points, double tolerance) {
  if (points.empty()) throw DomainError("levy_distance: no evaluation points");
  if (!(tolerance > 0.0)) throw DomainError("levy_distance: tolerance must be > 0");
  std::vector<double> xs(points.begin(), points.end());
  std::sort(xs.begin(), xs.end());
  for (const Cdf* c : {&f, &g}) {
    double prev = 0.0;
    for (double x : xs) {
      const double v = (*c)(x);
      if (v < prev || v < 0.0 || v > 1.0) {
        std::ostringstream os;
        os << "levy_distance: input is not a cdf (value " << v << " at x=" << x << ")";
        throw DomainError(os.str());
      }
      prev = v;
    }
  }
  auto sandwiched = [&](double eps) {
    for (double x : xs) {
      const double gx = g(x);
      if (f(x - eps) - eps > gx || gx > f(x + eps) + eps) return false;
    }
    return true;
  };
  if (sandwiched(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (sandwiched(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double levy_distance(const Spectrum& a, const Spectrum& b, double tolerance) {
  if (a.empty() || b.empty()) throw DomainError("levy_distance: empty spectrum");
  if (!(tolerance > 0.0)) throw DomainError("levy_distance: tolerance must be > 0");
  const auto& av = a.eigenvalues();
  const auto& bv = b.eigenvalues();
  // Both sides are right-continuous steps, so each one-sided sup is attained
  // at a jump of the cdf that appears unshifted.
  auto sandwiched = [&](double eps) {
    for (double t : bv)
      if (step_at(bv, t) - step_at(av, t + eps) > eps) return false;
    for (double t : av)
      if (step_at(av, t) - step_at(bv, t + eps) > eps) return false;
    return true;
  };
  if (sandwiched(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (sandwiched(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double sup_density_error(const Density& f_est, std::span<const double> grid) {
  if (grid.empty()) throw DomainError("sup_density_error: empty grid");
  constexpr double slack = 1e-12;
  if (grid.front() < -2.0 - slack || grid.back() > 2.0 + slack)
    throw DomainError("sup_density_error: grid leaves [-2, 2]");
  if (grid.front() > -2.0 + slack || grid.back() < 2.0 - slack)
    throw DomainError("sup_density_error: grid must reach both -2 and 2");
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i] > grid[i - 1] && grid[i] - grid[i - 1] <= 0.01 + slack))
      throw DomainError("sup_density_error: grid must be increasing with spacing <= 0.01");
    worst = std::max(worst, std::abs(f_est(grid[i]) - semicircle_pdf(grid[i])));
  }
  return worst;
}

TraceBound levy_cube_trace_bound(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  require_same_size(a, b);
  const double levy =
      levy_distance(symmetric_eigenvalues(a), symmetric_eigenvalues(b), 1e-5);
  const double lhs = levy * levy * levy;
  const double rhs = trace_of_squared_difference(a, b) / static_cast<double>(a.size());
  return {lhs, rhs, lhs <= rhs + 1e-4};
}

RankCheck rank_inequality_check(const SymmetricMatrix& a, const SymmetricMatrix& b,
                                std::size_t rank_bound) {
  require_same_size(a, b);
  const double sup = kolmogorov_distance(symmetric_eigenvalues(a), symmetric_eigenvalues(b));
  const double bound = static_cast<double>(rank_bound) / static_cast<double>(a.size());
  return {sup, bound, sup <= bound + 1e-10};
}

}  // namespace semicircle
