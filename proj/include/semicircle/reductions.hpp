#pragma once

#include <cstddef>
#include <cstdint>

#include "semicircle/ensembles.hpp"
#include "semicircle/matrix.hpp"

namespace semicircle {

/// Copy of `m` with the diagonal set to zero.
SymmetricMatrix zero_diagonal(const SymmetricMatrix& m);

/// Raw entries with |x| > b_n replaced by 0, still unscaled.
SymmetricMatrix truncate_raw(const SymmetricMatrix& raw, double b_n);

/// x 1{|x| <= b_n} / b_n applied to raw (unscaled) entries.
SymmetricMatrix truncate_entries(const SymmetricMatrix& raw, double b_n);

struct TruncatedMoments {
  double mean;      // E[X 1{|X| <= b}]
  double variance;  // Var(X 1{|X| <= b}) = l(b) - mean^2
};

TruncatedMoments truncated_moments(EntryDistribution dist, double b_n);

/// Off-diagonal entries become (x 1{|x| <= b_n} - mean) / sqrt(n variance)
/// with the population truncated moments of `dist`; the diagonal is zero.
/// Throws DomainError when the truncated variance is not positive.
SymmetricMatrix center_and_rescale(const SymmetricMatrix& truncated_raw, EntryDistribution dist,
                                   double b_n, std::size_t n);

/// Diagonal removal, truncation at b_n, then centering and rescaling.
SymmetricMatrix reduction_chain(const SymmetricMatrix& raw, EntryDistribution dist, double b_n);

/// Monte Carlo estimate of E[Y^2 1{|Y| > eta sqrt(n)}] where
/// Y = (X 1{|X| <= b_n} - mean) / sqrt(variance) and b_n = scaling_constant(dist, n).
/// Requires eta > 0 and mc_samples >= 10^4.
double lindeberg_diagnostic(EntryDistribution dist, std::size_t n, double eta,
                            std::size_t mc_samples, std::uint64_t seed);

}  // namespace semicircle
