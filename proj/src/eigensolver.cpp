#include "semicircle/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "semicircle/error.hpp"

namespace semicircle {

Spectrum::Spectrum(std::vector<double> values, double scaling_used)
    : Spectrum(std::move(values), 0, scaling_used) {
  source_n_ = values_.size();
}

Spectrum::Spectrum(std::vector<double> values, std::size_t source_n, double scaling_used)
    : values_(std::move(values)), source_n_(source_n), scaling_(scaling_used) {
  std::stable_sort(values_.begin(), values_.end());
}

Spectrum Spectrum::shifted(double c) const {
  std::vector<double> v = values_;
  for (double& x : v) x += c;
  return Spectrum(std::move(v), source_n_, scaling_);
}

Tridiagonal tridiagonalize(const SymmetricMatrix& m) {
  const std::size_t n = m.size();
  Tridiagonal out;
  out.diagonal.assign(n, 0.0);
  out.offdiagonal.assign(n > 0 ? n - 1 : 0, 0.0);
  if (n == 0) return out;

  // Working copy; only the lower triangle (j <= i) is kept current.
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t off = k + 1;  // first row of the trailing block
    double tail = 0.0;
    for (std::size_t i = off + 1; i < n; ++i) tail += at(i, k) * at(i, k);
    const double x0 = at(off, k);
    if (tail == 0.0) {
      out.offdiagonal[k] = x0;
      continue;
    }
    const double alpha = std::sqrt(x0 * x0 + tail);
    const double sub = x0 >= 0.0 ? -alpha : alpha;

    v[off] = x0 - sub;
    for (std::size_t i = off + 1; i < n; ++i) v[i] = at(i, k);
    const double beta = 1.0 / (alpha * (alpha + std::abs(x0)));  // 2 / (v.v)

    // p = beta * A22 v using the lower triangle.
    std::fill(p.begin() + off, p.end(), 0.0);
    for (std::size_t i = off; i < n; ++i) {
      const double* row = &a[i * n];
      double acc = 0.0;
      const double vi = v[i];
      for (std::size_t j = off; j < i; ++j) {
        acc += row[j] * v[j];
        p[j] += row[j] * vi;
      }
      p[i] += acc + row[i] * vi;
    }
    double pv = 0.0;
    for (std::size_t i = off; i < n; ++i) {
      p[i] *= beta;
      pv += p[i] * v[i];
    }
    // w = p - (beta/2)(p.v) v, stored over p.
    const double half = 0.5 * beta * pv;
    for (std::size_t i = off; i < n; ++i) p[i] -= half * v[i];

    for (std::size_t i = off; i < n; ++i) {
      double* row = &a[i * n];
      const double vi = v[i];
      const double wi = p[i];
      for (std::size_t j = off; j <= i; ++j) row[j] -= vi * p[j] + wi * v[j];
    }
    out.offdiagonal[k] = sub;
  }
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = at(i, i);
  if (n >= 2) out.offdiagonal[n - 2] = at(n - 1, n - 2);
  return out;
}

std::vector<double> tridiagonal_eigenvalues(Tridiagonal t) {
  std::vector<double>& d = t.diagonal;
  const std::size_t n = d.size();
  if (n == 0) return {};
  // e[i] couples d[i] and d[i+1]; e[n-1] is a zero sentinel.
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiagonal.begin(), t.offdiagonal.end(), e.begin());

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const std::size_t budget = 30 * n;
  std::size_t iterations = 0;

  for (std::size_t l = 0; l < n; ++l) {
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m)
        if (std::abs(e[m]) <= eps * (std::abs(d[m]) + std::abs(d[m + 1]))) break;
      if (m == l) break;

      if (++iterations > budget)
        throw NumericError("symmetric_eigenvalues: no convergence after " +
                           std::to_string(budget) + " QL iterations at index " +
                           std::to_string(l));

      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::stable_sort(d.begin(), d.end());
  return std::move(d);
}

Spectrum symmetric_eigenvalues(const SymmetricMatrix& m, double scaling_used) {
  if (m.size() == 0) throw DomainError("symmetric_eigenvalues: empty matrix");
  return Spectrum(tridiagonal_eigenvalues(tridiagonalize(m)), m.size(), scaling_used);
}

}  // namespace semicircle
