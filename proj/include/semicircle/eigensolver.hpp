#pragma once

#include <cstddef>
#include <vector>

#include "semicircle/matrix.hpp"

namespace semicircle {

/// Eigenvalues of a real symmetric matrix, ascending.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values` ascending (stable). `source_n` defaults to values.size().
  explicit Spectrum(std::vector<double> values, double scaling_used = 1.0);
  Spectrum(std::vector<double> values, std::size_t source_n, double scaling_used);

  const std::vector<double>& eigenvalues() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::size_t source_n() const noexcept { return source_n_; }
  /// The b_n the source matrix was divided by (1 when unknown).
  double scaling_used() const noexcept { return scaling_; }

  double front() const { return values_.front(); }
  double back() const { return values_.back(); }

  /// Spectrum with every eigenvalue shifted by c.
  Spectrum shifted(double c) const;

 private:
  std::vector<double> values_;
  std::size_t source_n_ = 0;
  double scaling_ = 1.0;
};

struct Tridiagonal {
  std::vector<double> diagonal;     // n
  std::vector<double> offdiagonal;  // n - 1
};

/// Householder reduction to a symmetric tridiagonal matrix orthogonally similar to `m`.
Tridiagonal tridiagonalize(const SymmetricMatrix& m);

/// Eigenvalues of a symmetric tridiagonal matrix by implicit Wilkinson-shift QL.
/// Throws NumericError naming the stuck index if 30*n iterations do not suffice.
std::vector<double> tridiagonal_eigenvalues(Tridiagonal t);

/// Full spectrum of `m`. `scaling_used` is recorded as provenance only.
Spectrum symmetric_eigenvalues(const SymmetricMatrix& m, double scaling_used = 1.0);

}  // namespace semicircle
