#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "semicircle/eigensolver.hpp"
#include "semicircle/matrix.hpp"

namespace semicircle {

using Cdf = std::function<double(double)>;
using Density = std::function<double(double)>;

/// sup_x |ESD(x) - G(x)| for a continuous G, evaluated exactly at the jumps
/// using both the right value and the left limit of the step function.
double kolmogorov_distance(const Spectrum& esd, const Cdf& g);
inline double kolmogorov_distance(const Cdf& g, const Spectrum& esd) { return kolmogorov_distance(esd, g); }

/// sup_x |ESD_a(x) - ESD_b(x)|, exact over the union of jump points.
double kolmogorov_distance(const Spectrum& a, const Spectrum& b);

/// sup_x |F(x) - G(x)| for two smooth cdfs: maximum over `grid`, refined by
/// golden-section search between the neighbours of the coarse maximum.
double kolmogorov_distance(const Cdf& f, const Cdf& g, std::span<const double> grid);

/// Levy distance between two cdfs. The sandwich condition
///   F(x - eps) - eps <= G(x) <= F(x + eps) + eps
/// is checked at `points`; eps is located by bisection to `tolerance` and the
/// returned value is the smallest eps found to satisfy it.
/// Throws DomainError if either cdf is decreasing or leaves [0,1] on `points`.
double levy_distance(const Cdf& f, const Cdf& g, std::span<const double> points, double tolerance);

/// Levy distance between two empirical spectral distributions. The sandwich
/// condition is checked exactly at the jump points.
double levy_distance(const Spectrum& a, const Spectrum& b, double tolerance);

/// max over `grid` of |f_est(x) - semicircle_pdf(x)|. The grid must lie in
/// [-2, 2], reach both endpoints and have spacing <= 0.01.
double sup_density_error(const Density& f_est, std::span<const double> grid);

struct TraceBound {
  double lhs;  // L^3(ESD_a, ESD_b)
  double rhs;  // tr((a - b)^2) / n
  bool holds;  // lhs <= rhs + 1e-4
};

TraceBound levy_cube_trace_bound(const SymmetricMatrix& a, const SymmetricMatrix& b);

struct RankCheck {
  double sup_diff;  // Kolmogorov distance between the two ESDs
  double bound;     // rank_bound / n
  bool holds;       // sup_diff <= bound + 1e-10
};

/// `rank_bound` must be a certified upper bound on rank(a - b).
RankCheck rank_inequality_check(const SymmetricMatrix& a, const SymmetricMatrix& b,
                                std::size_t rank_bound);

}  // namespace semicircle
