#pragma once

#include <complex>
#include <span>
#include <vector>

#include "semicircle/eigensolver.hpp"

namespace semicircle {

/// A point in the open upper half plane.
class ComplexPoint {
 public:
  /// Throws DomainError unless im > 0.
  ComplexPoint(double re, double im);
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  std::complex<double> value() const noexcept { return z_; }

 private:
  std::complex<double> z_;
};

/// m(z) = p^{-1} sum_i (mu_i - z)^{-1}
std::complex<double> stieltjes_esd(const Spectrum& spec, ComplexPoint z);

/// Root of s^2 + z s + 1 = 0 with Im s > 0, the transform of the semicircle law.
std::complex<double> stieltjes_semicircle(ComplexPoint z);

struct IdentityCheck {
  double kde_value;
  double transform_value;
  double abs_difference;
};

/// Cauchy-kernel density at x against pi^{-1} Im m(x + i h).
IdentityCheck cauchy_kernel_identity_check(const Spectrum& spec, double h, double x);

/// Largest abs_difference of the identity over a grid.
double cauchy_identity_max_difference(const Spectrum& spec, double h, std::span<const double> grid);

/// Density recovered from the transform, pi^{-1} Im m(x + i h), over a grid.
std::vector<double> transform_density(const Spectrum& spec, double h, std::span<const double> grid);

}  // namespace semicircle
