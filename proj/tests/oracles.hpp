#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol);
}

// Endpoint-singular integrands (sqrt behaviour at the ends).
inline double integrate_singular(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b);
}

inline double semicircle_density(double x) {
  return std::abs(x) < 2.0 ? std::sqrt(4.0 - x * x) / (2.0 * M_PI) : 0.0;
}

// Characteristic polynomial coefficients c[0..n] of det(lambda I - A), c[n] = 1,
// by Faddeev-LeVerrier on a dense row-major matrix.
inline std::vector<double> char_poly(const std::vector<double>& a, std::size_t n) {
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  std::vector<double> m(n * n, 0.0);  // M_0 = 0
  std::vector<double> am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<double> next(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += a[i * n + l] * m[l * n + j];
        next[i * n + j] = s + (i == j ? c[n - k + 1] : 0.0);
      }
    m = next;
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i * n + l] * m[l * n + i];
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

inline double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Real roots of a polynomial with only real, simple roots inside [lo, hi]:
// sign-change scan followed by bisection.
inline std::vector<double> real_roots(const std::vector<double>& c, double lo, double hi,
                                      std::size_t steps = 200000) {
  std::vector<double> roots;
  double x0 = lo, f0 = poly_eval(c, lo);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double x1 = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps);
    const double f1 = poly_eval(c, x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = poly_eval(c, mid);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

// Step cdf of a finite point set.
inline double step_cdf(const std::vector<double>& pts, double x) {
  double c = 0.0;
  for (double p : pts)
    if (p <= x) c += 1.0;
  return c / static_cast<double>(pts.size());
}

// Levy distance by brute-force scan over an eps grid and an x grid.
inline double levy_bruteforce(const std::function<double(double)>& f,
                              const std::function<double(double)>& g, double x_lo, double x_hi,
                              double x_step, double eps_step) {
  for (double eps = 0.0; eps <= 1.0 + eps_step; eps += eps_step) {
    bool ok = true;
    for (double x = x_lo; x <= x_hi && ok; x += x_step) {
      const double gx = g(x);
      if (f(x - eps) - eps > gx + 1e-15 || gx > f(x + eps) + eps + 1e-15) ok = false;
    }
    if (ok) return eps;
  }
  return 1.0;
}

// Random symmetric matrix with entries uniform in [lo, hi], row-major.
inline std::vector<double> random_symmetric(std::size_t n, std::uint64_t seed, double lo = -1.0,
                                            double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
  return a;
}

}  // namespace oracle
