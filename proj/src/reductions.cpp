#include "semicircle/reductions.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "semicircle/error.hpp"

namespace semicircle {

namespace {

void require_threshold(double b_n) {
  if (!(b_n > 0.0)) {
    std::ostringstream os;
    os << "truncation threshold b_n must be > 0, got " << b_n;
    throw DomainError(os.str());
  }
}

double cut(double x, double b_n) { return std::abs(x) <= b_n ? x : 0.0; }

}  // namespace

SymmetricMatrix zero_diagonal(const SymmetricMatrix& m) {
  SymmetricMatrix out = m;
  for (std::size_t i = 0; i < m.size(); ++i) out.set(i, i, 0.0);
  return out;
}

SymmetricMatrix truncate_raw(const SymmetricMatrix& raw, double b_n) {
  require_threshold(b_n);
  const std::size_t n = raw.size();
  SymmetricMatrix out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) out.set(j, k, cut(raw(j, k), b_n));
  return out;
}

SymmetricMatrix truncate_entries(const SymmetricMatrix& raw, double b_n) {
  require_threshold(b_n);
  const std::size_t n = raw.size();
  SymmetricMatrix out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) out.set(j, k, cut(raw(j, k), b_n) / b_n);
  return out;
}

TruncatedMoments truncated_moments(EntryDistribution dist, double b_n) {
  require_threshold(b_n);
  const double mean = truncated_mean(dist, b_n);
  return {mean, truncated_second_moment(dist, b_n) - mean * mean};
}

SymmetricMatrix center_and_rescale(const SymmetricMatrix& truncated_raw, EntryDistribution dist,
                                   double b_n, std::size_t n) {
  const TruncatedMoments mom = truncated_moments(dist, b_n);
  if (!(mom.variance > 0.0)) {
    std::ostringstream os;
    os << "center_and_rescale: truncated variance " << mom.variance << " is not positive";
    throw DomainError(os.str());
  }
  const double scale = std::sqrt(static_cast<double>(n) * mom.variance);
  const std::size_t m = truncated_raw.size();
  SymmetricMatrix out(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k)
      out.set(j, k, (cut(truncated_raw(j, k), b_n) - mom.mean) / scale);
  return out;
}

SymmetricMatrix reduction_chain(const SymmetricMatrix& raw, EntryDistribution dist, double b_n) {
  return center_and_rescale(truncate_raw(zero_diagonal(raw), b_n), dist, b_n, raw.size());
}

double lindeberg_diagnostic(EntryDistribution dist, std::size_t n, double eta,
                            std::size_t mc_samples, std::uint64_t seed) {
  if (!(eta > 0.0)) throw DomainError("lindeberg_diagnostic: eta must be > 0");
  if (mc_samples < 10000)
    throw DomainError("lindeberg_diagnostic: mc_samples must be >= 10^4, got " +
                      std::to_string(mc_samples));
  const double b_n = scaling_constant(dist, n).b_n;
  const TruncatedMoments mom = truncated_moments(dist, b_n);
  if (!(mom.variance > 0.0)) throw DomainError("lindeberg_diagnostic: truncated variance is zero");
  const double sd = std::sqrt(mom.variance);
  const double threshold = eta * std::sqrt(static_cast<double>(n));

  EntrySampler draw(dist, seed);
  double sum = 0.0;
  for (std::size_t i = 0; i < mc_samples; ++i) {
    const double y = (cut(draw(), b_n) - mom.mean) / sd;
    if (std::abs(y) > threshold) sum += y * y;
  }
  return sum / static_cast<double>(mc_samples);
}

}  // namespace semicircle
