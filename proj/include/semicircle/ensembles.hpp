#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "semicircle/matrix.hpp"

namespace semicircle {

/// The supported i.i.d. entry laws. All have mean exactly zero.
///
///   shifted_exponential  X = E - 1,  E ~ Exp(1);        P(X <= x) = 1 - exp(-(x+1)), x >= -1
///   shifted_poisson      X = P - 1,  P ~ Poisson(1);    P(X = k) = exp(-1)/(k+1)!, k >= -1
///   standard_normal      X ~ N(0, 1)
///   log_tail_heavy       density |t|^-3 on |t| >= 1;    l(x) = 2 ln x, infinite variance
enum class Variant { shifted_exponential, shifted_poisson, standard_normal, log_tail_heavy };

class EntryDistribution {
 public:
  explicit constexpr EntryDistribution(Variant v) noexcept : variant_(v) {}

  /// Throws ConfigError for an unknown name.
  static EntryDistribution from_name(std::string_view name);

  Variant variant() const noexcept { return variant_; }
  std::string_view name() const noexcept;

  std::optional<double> analytic_variance() const noexcept;
  bool has_finite_variance() const noexcept { return analytic_variance().has_value(); }

  /// inf{x > 0 : l(x) > 0}
  double positivity_threshold() const noexcept;

  friend bool operator==(const EntryDistribution&, const EntryDistribution&) = default;

 private:
  Variant variant_;
};

/// Names accepted by EntryDistribution::from_name, in declaration order.
std::span<const std::string_view> distribution_names() noexcept;

/// Draws i.i.d. values from one entry law.
///
/// Built on std::mt19937_64 (whose output sequence is fixed by the standard)
/// with explicit inversion / Box-Muller transforms, so a seed reproduces the
/// same stream on every conforming toolchain.
class EntrySampler {
 public:
  EntrySampler(EntryDistribution dist, std::uint64_t seed) : dist_(dist), engine_(seed) {}
  double operator()();

 private:
  double uniform();  // [0, 1)

  EntryDistribution dist_;
  std::mt19937_64 engine_;
};

/// `count` i.i.d. draws, deterministic in `seed`. Throws DomainError for count == 0.
std::vector<double> sample_entries(EntryDistribution dist, std::size_t count, std::uint64_t seed);

/// l(x) = E[X^2 1{|X| <= x}]. Throws DomainError for x <= 0.
double truncated_second_moment(EntryDistribution dist, double x);
/// E[X 1{|X| <= x}]
double truncated_mean(EntryDistribution dist, double x);
/// P(|X| > x)
double tail_probability(EntryDistribution dist, double x);

enum class ScalingMode { finite_variance, infinite_variance };

struct ScalingConstant {
  double b_n = 1.0;
  std::size_t n = 0;
  ScalingMode mode = ScalingMode::finite_variance;
};

/// b_n = sqrt(n Var X) when the variance is finite, otherwise
/// inf{x >= b + 1 : n l(x) <= x^2} located by bisection to 1e-10 relative.
ScalingConstant scaling_constant(EntryDistribution dist, std::size_t n);

/// Unscaled symmetric matrix (X_jk). Draws are consumed row-major over the
/// upper triangle including the diagonal: (0,0), (0,1), ..., (0,n-1), (1,1), ...
SymmetricMatrix build_raw_entries(EntryDistribution dist, std::size_t n, std::uint64_t seed);

struct WignerSample {
  SymmetricMatrix matrix;
  ScalingConstant scaling;
};

/// W_n = b_n^{-1} (X_jk). Requires n >= 2.
WignerSample build_wigner(EntryDistribution dist, std::size_t n, std::uint64_t seed);

struct TailRatio {
  double x;
  double ratio;  // x^2 P(|X| > x) / l(x)
};

/// Throws DomainError if some x <= b or l(x) == 0.
std::vector<TailRatio> tail_diagnostic(EntryDistribution dist, std::span<const double> x_grid);

}  // namespace semicircle
