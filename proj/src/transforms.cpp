#include "semicircle/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "semicircle/error.hpp"
#include "semicircle/estimators.hpp"

namespace semicircle {

ComplexPoint::ComplexPoint(double re, double im) : z_(re, im) {
  if (!(im > 0.0)) {
    std::ostringstream os;
    os << "evaluation point must lie in the upper half plane, got Im z = " << im;
    throw DomainError(os.str());
  }
}

std::complex<double> stieltjes_esd(const Spectrum& spec, ComplexPoint z) {
  if (spec.empty()) throw DomainError("spectrum is empty");
  std::complex<double> sum = 0.0;
  for (double mu : spec.eigenvalues()) sum += 1.0 / (mu - z.value());
  return sum / static_cast<double>(spec.size());
}

std::complex<double> stieltjes_semicircle(ComplexPoint z) {
  const std::complex<double> zz = z.value();
  const std::complex<double> q = std::sqrt(zz * zz - 4.0);
  // Larger-magnitude root first, the other from the product of roots (= 1).
  const std::complex<double> big =
      std::real(std::conj(zz) * q) >= 0.0 ? (-zz - q) / 2.0 : (-zz + q) / 2.0;
  const std::complex<double> small = 1.0 / big;
  return big.imag() > 0.0 ? big : small;
}

IdentityCheck cauchy_kernel_identity_check(const Spectrum& spec, double h, double x) {
  const double kde = kde_at(spec, cauchy_kernel(), h, x);
  const double transform = stieltjes_esd(spec, ComplexPoint(x, h)).imag() * std::numbers::inv_pi;
  return {kde, transform, std::abs(kde - transform)};
}

double cauchy_identity_max_difference(const Spectrum& spec, double h, std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, cauchy_kernel_identity_check(spec, h, x).abs_difference);
  return worst;
}

std::vector<double> transform_density(const Spectrum& spec, double h, std::span<const double> grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid)
    out.push_back(stieltjes_esd(spec, ComplexPoint(x, h)).imag() * std::numbers::inv_pi);
  return out;
}

}  // namespace semicircle
