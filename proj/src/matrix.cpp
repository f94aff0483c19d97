#include "semicircle/matrix.hpp"

#include <string>

#include "semicircle/error.hpp"

namespace semicircle {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n * n)
    throw DomainError("symmetric matrix: expected " + std::to_string(n * n) + " entries, got " +
                      std::to_string(a_.size()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (a_[j * n + k] != a_[k * n + j])
        throw DomainError("symmetric matrix: entries (" + std::to_string(j) + "," +
                          std::to_string(k) + ") and (" + std::to_string(k) + "," +
                          std::to_string(j) + ") differ");
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
  SymmetricMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = d[i];
  return m;
}

double SymmetricMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymmetricMatrix::frobenius_squared() const noexcept {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return s;
}

SymmetricMatrix SymmetricMatrix::scaled(double factor) const {
  SymmetricMatrix m = *this;
  for (double& v : m.a_) v *= factor;
  return m;
}

SymmetricMatrix SymmetricMatrix::shifted(double c) const {
  SymmetricMatrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) m.a_[i * n_ + i] += c;
  return m;
}

SymmetricMatrix SymmetricMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw DomainError("permutation size does not match matrix size");
  SymmetricMatrix m(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m.a_[perm[j] * n_ + perm[k]] = a_[j * n_ + k];
  return m;
}

double trace_of_squared_difference(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.size() != b.size())
    throw DomainError("matrix size mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  double s = 0.0;
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
  return s;
}

}  // namespace semicircle
