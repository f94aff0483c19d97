#include "semicircle/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "semicircle/error.hpp"
#include "semicircle/estimators.hpp"
#include "semicircle/metrics.hpp"

namespace semicircle {

double BandwidthRule::for_size(std::size_t n) const {
  return fixed ? *fixed : bandwidth_default(n);
}

std::string BandwidthRule::describe() const {
  return fixed ? format_double(*fixed) : std::string("paper_default");
}

std::vector<double> GridSpec::values() const { return linear_grid(lo, hi, points); }

void ExperimentConfig::validate() const {
  EntryDistribution::from_name(distribution);
  kernel_by_name(kernel);
  if (sizes.empty()) throw ConfigError("config: sizes must not be empty");
  for (auto n : sizes)
    if (n < 2) throw ConfigError("config: every size must be >= 2, got " + std::to_string(n));
  if (replicates < 1) throw ConfigError("config: replicates must be >= 1");
  if (!(grid.lo < grid.hi)) throw ConfigError("config: grid lo must be < hi");
  if (grid.points < 2) throw ConfigError("config: grid needs at least 2 points");
  if (bandwidth.fixed && !(*bandwidth.fixed > 0.0))
    throw ConfigError("config: fixed bandwidth must be > 0");
}

std::string ExperimentConfig::describe() const {
  std::string s = "dist=" + distribution + ", sizes=";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? ";" : "") + std::to_string(sizes[i]);
  s += ", kernel=" + kernel + ", bandwidth=" + bandwidth.describe() + ", grid=" +
       format_double(grid.lo) + ";" + format_double(grid.hi) + ";" + std::to_string(grid.points) +
       ", replicates=" + std::to_string(replicates) + ", seed=" + std::to_string(base_seed);
  return s;
}

std::vector<double> density_grid(std::size_t points) { return linear_grid(-2.0, 2.0, points); }

double median(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of an empty sequence");
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

SpectrumRun run_spectrum(EntryDistribution dist, std::size_t n, std::uint64_t seed) {
  WignerSample w = build_wigner(dist, n, seed);
  Spectrum spec = symmetric_eigenvalues(w.matrix, w.scaling.b_n);
  Table table = spectrum_table(
      spec, {"command=spectrum, dist=" + std::string(dist.name()) + ", n=" + std::to_string(n) +
                 ", seed=" + std::to_string(seed) + ", b_n=" + format_double(w.scaling.b_n)});
  return {std::move(spec), w.scaling, std::move(w.matrix), std::move(table)};
}

FigureData run_figure(int figure, std::uint64_t seed) {
  if (figure < 1 || figure > 4)
    throw ConfigError("figure must be 1, 2, 3 or 4, got " + std::to_string(figure));
  FigureData fd;
  fd.figure = figure;
  fd.distribution = EntryDistribution(figure % 2 == 1 ? Variant::shifted_exponential
                                                      : Variant::shifted_poisson);
  const bool densities = figure <= 2;
  fd.sizes = densities ? std::vector<std::size_t>{50, 800} : std::vector<std::size_t>{50};
  for (std::size_t i = 0; i < fd.sizes.size(); ++i) {
    fd.seeds.push_back(seed + i);
    const WignerSample w = build_wigner(fd.distribution, fd.sizes[i], fd.seeds[i]);
    fd.spectra.push_back(symmetric_eigenvalues(w.matrix, w.scaling.b_n));
  }

  const KernelSpec& k = gaussian_kernel();
  const std::vector<double> grid = linear_grid(-3.0, 3.0, kFigureGridPoints);
  Table& t = fd.table;
  std::string meta = "command=figure, figure=" + std::to_string(figure) +
                     ", dist=" + std::string(fd.distribution.name()) + ", kernel=gaussian, seed=" +
                     std::to_string(seed);
  for (std::size_t i = 0; i < fd.sizes.size(); ++i)
    meta += ", h_n" + std::to_string(fd.sizes[i]) + "=" +
            format_double(bandwidth_default(fd.sizes[i])) + ", seed_n" +
            std::to_string(fd.sizes[i]) + "=" + std::to_string(fd.seeds[i]);
  t.comments.push_back(meta);
  if (densities)
    t.columns = {"x", "kde_n50", "kde_n800", "semicircle_pdf"};
  else
    t.columns = {"x", "kcdf_n50", "esd_n50", "semicircle_cdf"};

  const double h50 = bandwidth_default(50);
  for (double x : grid) {
    std::vector<std::string> row{format_double(x)};
    if (densities) {
      row.push_back(format_double(kde_at(fd.spectra[0], k, h50, x)));
      row.push_back(format_double(kde_at(fd.spectra[1], k, bandwidth_default(800), x)));
      row.push_back(format_double(semicircle_pdf(x)));
    } else {
      row.push_back(format_double(kcdf_at(fd.spectra[0], k, h50, x)));
      row.push_back(format_double(esd_at(fd.spectra[0], x)));
      row.push_back(format_double(semicircle_cdf(x)));
    }
    t.rows.push_back(std::move(row));
  }
  return fd;
}

namespace {

ReplicateResult run_replicate(const ExperimentConfig& config, EntryDistribution dist,
                              const KernelSpec& kernel, std::span<const double> ks_grid,
                              std::span<const double> dens_grid, std::size_t n,
                              std::size_t replicate) {
  ReplicateResult r;
  r.n = n;
  r.replicate = replicate;
  r.seed = replicate_seed(config.base_seed, replicate);
  try {
    const WignerSample w = build_wigner(dist, n, r.seed);
    const Spectrum spec = symmetric_eigenvalues(w.matrix, w.scaling.b_n);
    const double h = config.bandwidth.for_size(n);
    r.bandwidth = h;
    r.ks_kcdf = kolmogorov_distance([&](double x) { return kcdf_at(spec, kernel, h, x); },
                                    semicircle_cdf, ks_grid);
    r.ks_esd = kolmogorov_distance(spec, semicircle_cdf);
    r.sup_density =
        sup_density_error([&](double x) { return kde_at(spec, kernel, h, x); }, dens_grid);
  } catch (const Error& e) {
    throw Error(e.kind(), "convergence n=" + std::to_string(n) + " replicate=" +
                              std::to_string(replicate) + " seed=" + std::to_string(r.seed) +
                              ": " + e.what());
  }
  return r;
}

}  // namespace

ConvergenceResult run_convergence(const ExperimentConfig& config) {
  config.validate();
  const EntryDistribution dist = EntryDistribution::from_name(config.distribution);
  const KernelSpec& kernel = kernel_by_name(config.kernel);
  const std::vector<double> ks_grid = config.grid.values();
  const std::vector<double> dens_grid = density_grid();

  const std::size_t tasks = config.sizes.size() * config.replicates;
  ConvergenceResult out;
  out.rows.resize(tasks);
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks;) {
      try {
        out.rows[t] = run_replicate(config, dist, kernel, ks_grid, dens_grid,
                                    config.sizes[t / config.replicates], t % config.replicates);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, tasks);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    std::vector<double> a, b, c;
    for (std::size_t r = 0; r < config.replicates; ++r) {
      const auto& row = out.rows[s * config.replicates + r];
      a.push_back(row.ks_kcdf);
      b.push_back(row.ks_esd);
      c.push_back(row.sup_density);
    }
    out.medians.push_back({config.sizes[s], median(a), median(b), median(c)});
  }

  Table& t = out.table;
  t.comments.push_back("command=convergence, " + config.describe());
  t.columns = {"row", "n", "replicate", "seed", "h", "ks_kcdf", "ks_esd", "sup_density"};
  for (const auto& r : out.rows)
    t.rows.push_back({"replicate", std::to_string(r.n), std::to_string(r.replicate),
                      std::to_string(r.seed), format_double(r.bandwidth), format_double(r.ks_kcdf),
                      format_double(r.ks_esd), format_double(r.sup_density)});
  for (const auto& m : out.medians)
    t.rows.push_back({"median", std::to_string(m.n), "", "",
                      format_double(config.bandwidth.for_size(m.n)), format_double(m.ks_kcdf),
                      format_double(m.ks_esd), format_double(m.sup_density)});
  return out;
}

}  // namespace semicircle
