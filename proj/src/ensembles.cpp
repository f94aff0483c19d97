#include "semicircle/ensembles.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "semicircle/error.hpp"

namespace semicircle {

namespace {

constexpr std::array<std::string_view, 4> kNames = {
    "shifted_exponential", "shifted_poisson", "standard_normal", "log_tail_heavy"};

constexpr double kInvE = 0.36787944117144232159552377016146;

// P(X = k) for X = Poisson(1) - 1, k >= -1.
double poisson_pmf(long k) {
  double p = kInvE;
  for (long j = 2; j <= k + 1; ++j) p /= static_cast<double>(j);
  return p;
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

// Antiderivatives in e of (e-1)^2 exp(-e) and (e-1) exp(-e).
// Both vanish past e = 800, where exp(-e) underflows.
double exp_second_antiderivative(double e) {
  return e > 800.0 ? 0.0 : -std::exp(-e) * (e * e + 1.0);
}
double exp_first_antiderivative(double e) { return e > 800.0 ? 0.0 : -e * std::exp(-e); }

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << what << ": argument must be > 0, got " << x;
    throw DomainError(os.str());
  }
}

}  // namespace

EntryDistribution EntryDistribution::from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return EntryDistribution(static_cast<Variant>(i));
  throw ConfigError("unknown distribution '" + std::string(name) +
                    "' (expected shifted_exponential, shifted_poisson, standard_normal or "
                    "log_tail_heavy)");
}

std::string_view EntryDistribution::name() const noexcept {
  return kNames[static_cast<std::size_t>(variant_)];
}

std::span<const std::string_view> distribution_names() noexcept { return kNames; }

std::optional<double> EntryDistribution::analytic_variance() const noexcept {
  if (variant_ == Variant::log_tail_heavy) return std::nullopt;
  return 1.0;
}

double EntryDistribution::positivity_threshold() const noexcept {
  switch (variant_) {
    case Variant::shifted_poisson:
    case Variant::log_tail_heavy:
      return 1.0;
    default:
      return 0.0;
  }
}

double EntrySampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double EntrySampler::operator()() {
  switch (dist_.variant()) {
    case Variant::shifted_exponential:
      return -std::log1p(-uniform()) - 1.0;
    case Variant::shifted_poisson: {
      const double u = uniform();
      long k = 0;
      double p = kInvE;
      double cdf = p;
      while (u > cdf && k < 64) {
        ++k;
        p /= static_cast<double>(k);
        cdf += p;
      }
      return static_cast<double>(k) - 1.0;
    }
    case Variant::standard_normal: {
      const double u1 = 1.0 - uniform();
      const double u2 = uniform();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    case Variant::log_tail_heavy: {
      const double sign = uniform() < 0.5 ? -1.0 : 1.0;
      return sign / std::sqrt(1.0 - uniform());
    }
  }
  throw ConfigError("unknown distribution variant");
}

std::vector<double> sample_entries(EntryDistribution dist, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw DomainError("sample_entries: count must be >= 1");
  EntrySampler draw(dist, seed);
  std::vector<double> out(count);
  for (double& v : out) v = draw();
  return out;
}

double truncated_second_moment(EntryDistribution dist, double x) {
  require_positive(x, "truncated_second_moment");
  switch (dist.variant()) {
    case Variant::shifted_exponential: {
      const double lo = std::max(0.0, 1.0 - x);
      return exp_second_antiderivative(1.0 + x) - exp_second_antiderivative(lo);
    }
    case Variant::shifted_poisson: {
      double sum = x >= 1.0 ? poisson_pmf(-1) : 0.0;
      double p = kInvE;  // P(X = 0)
      for (long k = 1; static_cast<double>(k) <= x; ++k) {
        p /= static_cast<double>(k + 1);
        const double term = static_cast<double>(k) * static_cast<double>(k) * p;
        if (term < 1e-16 && k > 2) break;
        sum += term;
      }
      return sum;
    }
    case Variant::standard_normal:
      if (std::isinf(x)) return 1.0;
      return std::erf(x / std::numbers::sqrt2) - 2.0 * x * normal_pdf(x);
    case Variant::log_tail_heavy:
      return x <= 1.0 ? 0.0 : 2.0 * std::log(x);
  }
  throw ConfigError("unknown distribution variant");
}

double truncated_mean(EntryDistribution dist, double x) {
  require_positive(x, "truncated_mean");
  switch (dist.variant()) {
    case Variant::shifted_exponential: {
      const double lo = std::max(0.0, 1.0 - x);
      return exp_first_antiderivative(1.0 + x) - exp_first_antiderivative(lo);
    }
    case Variant::shifted_poisson: {
      double sum = x >= 1.0 ? -poisson_pmf(-1) : 0.0;
      double p = kInvE;
      for (long k = 1; static_cast<double>(k) <= x; ++k) {
        p /= static_cast<double>(k + 1);
        const double term = static_cast<double>(k) * p;
        if (term < 1e-16 && k > 2) break;
        sum += term;
      }
      return sum;
    }
    case Variant::standard_normal:
    case Variant::log_tail_heavy:
      return 0.0;
  }
  throw ConfigError("unknown distribution variant");
}

double tail_probability(EntryDistribution dist, double x) {
  if (x < 0.0) return 1.0;
  switch (dist.variant()) {
    case Variant::shifted_exponential: {
      double p = std::exp(-(1.0 + x));
      if (x < 1.0) p += -std::expm1(-(1.0 - x));
      return p;
    }
    case Variant::shifted_poisson: {
      if (x > 200.0) return 0.0;  // 1/201! underflows
      double sum = x < 1.0 ? poisson_pmf(-1) : 0.0;
      // Smallest k >= 0 with k > x, then the upper tail summed directly.
      long k = static_cast<long>(std::floor(x)) + 1;
      double p = poisson_pmf(k);
      while (p > 0.0 && p > sum * 1e-17) {
        sum += p;
        ++k;
        p /= static_cast<double>(k + 1);
      }
      return sum;
    }
    case Variant::standard_normal:
      return std::erfc(x / std::numbers::sqrt2);
    case Variant::log_tail_heavy:
      return x < 1.0 ? 1.0 : 1.0 / (x * x);
  }
  throw ConfigError("unknown distribution variant");
}

ScalingConstant scaling_constant(EntryDistribution dist, std::size_t n) {
  if (n < 2) throw DomainError("scaling_constant: n must be >= 2, got " + std::to_string(n));
  const double nn = static_cast<double>(n);
  if (auto var = dist.analytic_variance())
    return {std::sqrt(nn * *var), n, ScalingMode::finite_variance};

  // n l(x) <= x^2  <=>  gap(x) >= 0
  auto gap = [&](double x) { return x * x - nn * truncated_second_moment(dist, x); };
  double lo = std::max(dist.positivity_threshold() + 1.0,
                       1.0 + std::numeric_limits<double>::epsilon());
  double hi = std::sqrt(nn) * std::log(nn) + 10.0;
  if (gap(lo) >= 0.0) return {lo, n, ScalingMode::infinite_variance};
  if (gap(hi) < 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "scaling_constant: root not bracketed for n=" << n << ": gap(" << lo << ")=" << gap(lo)
       << ", gap(" << hi << ")=" << gap(hi);
    throw NumericError(os.str());
  }
  // gap(lo) < 0 <= gap(hi); x^2 - n l(x) has a single crossing above lo.
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return {hi, n, ScalingMode::infinite_variance};
}

SymmetricMatrix build_raw_entries(EntryDistribution dist, std::size_t n, std::uint64_t seed) {
  EntrySampler draw(dist, seed);
  SymmetricMatrix m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) m.set(j, k, draw());
  return m;
}

WignerSample build_wigner(EntryDistribution dist, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("build_wigner: n must be >= 2, got " + std::to_string(n));
  const ScalingConstant scaling = scaling_constant(dist, n);
  SymmetricMatrix raw = build_raw_entries(dist, n, seed);
  SymmetricMatrix w(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) w.set(j, k, raw(j, k) / scaling.b_n);
  return {std::move(w), scaling};
}

std::vector<TailRatio> tail_diagnostic(EntryDistribution dist, std::span<const double> x_grid) {
  std::vector<TailRatio> rows;
  rows.reserve(x_grid.size());
  for (double x : x_grid) {
    if (!(x > dist.positivity_threshold())) {
      std::ostringstream os;
      os << "tail_diagnostic: x=" << x << " must exceed b=" << dist.positivity_threshold();
      throw DomainError(os.str());
    }
    const double l = truncated_second_moment(dist, x);
    if (l == 0.0) throw DomainError("tail_diagnostic: l(x) = 0 at x=" + std::to_string(x));
    rows.push_back({x, x * x * tail_probability(dist, x) / l});
  }
  return rows;
}

}  // namespace semicircle
