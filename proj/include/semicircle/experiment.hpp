#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicircle/eigensolver.hpp"
#include "semicircle/ensembles.hpp"
#include "semicircle/io.hpp"

namespace semicircle {

/// n^{-2/5} unless a fixed bandwidth is set.
struct BandwidthRule {
  std::optional<double> fixed;
  double for_size(std::size_t n) const;
  std::string describe() const;
};

struct GridSpec {
  double lo = -3.0;
  double hi = 3.0;
  std::size_t points = 601;
  std::vector<double> values() const;
};

struct ExperimentConfig {
  std::string distribution = "standard_normal";
  std::vector<std::size_t> sizes{50, 200, 800};
  std::string kernel = "gaussian";
  BandwidthRule bandwidth;
  GridSpec grid;
  std::size_t replicates = 20;
  std::uint64_t base_seed = 1;
  std::size_t threads = 0;  // 0: hardware concurrency

  /// Throws ConfigError on the first violated constraint.
  void validate() const;
  /// One-line "key=value, ..." form used in CSV metadata.
  std::string describe() const;
};

/// Seed of replicate r: base_seed + r.
inline std::uint64_t replicate_seed(std::uint64_t base_seed, std::size_t r) { return base_seed + r; }

struct SpectrumRun {
  Spectrum spectrum;
  ScalingConstant scaling;
  SymmetricMatrix matrix;
  Table table;
};

/// Builds W_n, solves it, and renders the eigenvalue CSV.
SpectrumRun run_spectrum(EntryDistribution dist, std::size_t n, std::uint64_t seed);

/// Figures 1/2: exponential/Poisson densities at n = 50 and 800.
/// Figures 3/4: exponential/Poisson distribution functions at n = 50.
struct FigureData {
  int figure = 0;
  EntryDistribution distribution{Variant::shifted_exponential};
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<Spectrum> spectra;
  Table table;
};

inline constexpr std::size_t kFigureGridPoints = 601;

/// Throws ConfigError for a figure id outside 1..4. The size-50 matrix uses
/// `seed`, the size-800 matrix `seed + 1`.
FigureData run_figure(int figure, std::uint64_t seed);

struct ReplicateResult {
  std::size_t n = 0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  double bandwidth = 0.0;
  double ks_kcdf = 0.0;      // sup |F_n - F|
  double ks_esd = 0.0;       // sup |ESD - F|
  double sup_density = 0.0;  // sup_{[-2,2]} |f_n - f|
};

struct SizeMedians {
  std::size_t n = 0;
  double ks_kcdf = 0.0;
  double ks_esd = 0.0;
  double sup_density = 0.0;
};

struct ConvergenceResult {
  std::vector<ReplicateResult> rows;  // ordered by (size index, replicate)
  std::vector<SizeMedians> medians;   // one per size, config order
  Table table;
};

/// Replicated estimator errors per size. Replicates may run on several
/// threads; results do not depend on the thread count.
ConvergenceResult run_convergence(const ExperimentConfig& config);

/// Evaluation grid of `points` values on [-2, 2] (spacing 4/(points-1)).
std::vector<double> density_grid(std::size_t points = 401);

double median(std::vector<double> values);

}  // namespace semicircle
