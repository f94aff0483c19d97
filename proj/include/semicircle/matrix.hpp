#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace semicircle {

/// Dense real symmetric matrix stored row-major in full.
///
/// Symmetry is bit-exact: every mutation writes both (j,k) and (k,j), and
/// construction from a full array rejects any asymmetric pair.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n);
  /// Throws DomainError unless `row_major` has n*n entries and is exactly symmetric.
  SymmetricMatrix(std::size_t n, std::vector<double> row_major);

  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix diagonal(std::span<const double> d);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t j, std::size_t k) const noexcept { return a_[j * n_ + k]; }
  void set(std::size_t j, std::size_t k, double v) noexcept {
    a_[j * n_ + k] = v;
    a_[k * n_ + j] = v;
  }
  std::span<const double> data() const noexcept { return a_; }

  double trace() const noexcept;
  double frobenius_squared() const noexcept;

  /// Returns a copy with every entry multiplied by `factor`.
  SymmetricMatrix scaled(double factor) const;
  /// this + c*I
  SymmetricMatrix shifted(double c) const;
  /// P^T M P for the permutation taking index i to perm[i].
  SymmetricMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// tr((a - b)^2), i.e. the squared Frobenius norm of the difference.
double trace_of_squared_difference(const SymmetricMatrix& a, const SymmetricMatrix& b);

}  // namespace semicircle
