// semicircle: command-line experiment runner over the C API.
//
//   semicircle spectrum       --dist NAME --n N --seed S [--out FILE] [--matrix-out FILE]
//   semicircle figure         --fig 1|2|3|4 --seed S [--out DIR]
//   semicircle convergence    [--config FILE] [--dist ...] [--sizes 50,200,800] ...
//   semicircle identity-check (--n N --seed S [--dist NAME] | --spectrum FILE)
//
// Exit codes: 0 success, 1 usage, 2 numeric failure, 3 tolerance breach.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semicircle/semicircle.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitTolerance = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(sc_status s) {
  switch (s) {
    case SC_OK: return 0;
    case SC_ERR_INVALID_ARGUMENT:
    case SC_ERR_CONFIG:
    case SC_ERR_PARSE: return kExitUsage;
    case SC_ERR_TOLERANCE: return kExitTolerance;
    default: return kExitNumeric;
  }
}

int report(sc_status s) {
  if (s != SC_OK) std::cerr << "semicircle: " << sc_status_name(s) << ": " << sc_last_error() << '\n';
  return exit_code_for(s);
}

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '"' && c != '[' && c != ']') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  return v;
}

std::size_t to_size(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

struct Grid {
  double lo = -3.0;
  double hi = 3.0;
  std::size_t points = 601;

  std::vector<double> values() const {
    std::vector<double> g(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
  }
};

// "lo,hi,points" or "lo:hi:points"
Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ",:");
  if (parts.size() != 3) throw UsageError("--grid expects lo,hi,points, got '" + text + "'");
  Grid g{to_double(parts[0], "grid lo"), to_double(parts[1], "grid hi"),
         to_size(parts[2], "grid points")};
  if (!(g.lo < g.hi) || g.points < 2) throw UsageError("--grid needs lo < hi and points >= 2");
  return g;
}

// "paper_default"/"paper" (n^{-2/5}) or a positive number; returns 0 for the default rule.
double parse_bandwidth(const std::string& text) {
  if (text == "paper" || text == "paper_default") return 0.0;
  const double h = to_double(text, "bandwidth");
  if (!(h > 0.0)) throw UsageError("--bandwidth must be > 0 or 'paper'");
  return h;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  for (const auto& p : split(text, ",;"))
    if (!p.empty()) sizes.push_back(to_size(p, "size"));
  if (sizes.empty()) throw UsageError("--sizes must list at least one size");
  return sizes;
}

class Distribution {
 public:
  explicit Distribution(const std::string& name) {
    if (sc_status s = sc_distribution_create(name.c_str(), &d_); s != SC_OK)
      throw UsageError(sc_last_error());
  }
  ~Distribution() { sc_distribution_destroy(d_); }
  Distribution(const Distribution&) = delete;
  Distribution& operator=(const Distribution&) = delete;
  const sc_distribution* get() const { return d_; }

 private:
  sc_distribution* d_ = nullptr;
};

struct SpectrumHandle {
  sc_spectrum* s = nullptr;
  ~SpectrumHandle() { sc_spectrum_destroy(s); }
};

struct MatrixHandle {
  sc_matrix* m = nullptr;
  ~MatrixHandle() { sc_matrix_destroy(m); }
};

// Splices "--key=value" arguments from a convergence --config file in front of
// the command-line flags, so explicit flags win.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto sub = std::find(args.begin(), args.end(), "convergence");
  std::string path;
  for (auto it = sub; it != args.end(); ++it) {
    if (*it == "--config" && it + 1 != args.end()) path = *(it + 1);
    else if (it->rfind("--config=", 0) == 0) path = it->substr(9);
  }
  if (sub == args.end() || path.empty()) {
    std::reverse(args.begin(), args.end());
    return args;
  }
  std::vector<std::string> injected;
  try {
    for (const auto& item : CLI::ConfigINI().from_file(path)) {
      if (!item.parents.empty() && item.parents.front() != "convergence")
        throw UsageError("config section '" + item.parents.front() + "' is not supported");
      std::string value;
      for (const auto& v : item.inputs) value += (value.empty() ? "" : ",") + v;
      injected.push_back("--" + item.name + "=" + value);
    }
  } catch (const CLI::FileError& e) {
    throw UsageError(e.what());
  }
  args.insert(sub + 1, injected.begin(), injected.end());
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner matrix spectra and kernel estimators of the semicircle law"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sc_version()));

  std::string dist = "shifted_exponential";
  std::size_t n = 50;
  std::uint64_t seed = 1;
  std::string out;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of one Wigner matrix as CSV");
  std::string matrix_out;
  spectrum->add_option("--dist", dist, "entry distribution")->capture_default_str();
  spectrum->add_option("--n", n, "matrix size")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  spectrum->add_option("--seed", seed, "random seed")->capture_default_str();
  spectrum->add_option("--out", out, "output CSV (default stdout)");
  spectrum->add_option("--matrix-out", matrix_out, "also write the dense matrix CSV here");

  auto* figure = app.add_subcommand("figure", "plot-ready CSV for one of the four figures");
  int fig = 0;
  figure->add_option("--fig", fig, "figure id 1..4")->required();
  figure->add_option("--seed", seed, "random seed")->capture_default_str();
  figure->add_option("--out", out, "output directory (writes figure<N>.csv; default stdout)");

  auto* convergence = app.add_subcommand("convergence", "replicated estimator errors by size");
  std::string config_file;
  convergence->add_option("--config", config_file, "key=value experiment file (flags override it)");
  std::string conv_dist = "standard_normal";
  std::string sizes_text = "50,200,800";
  std::optional<std::size_t> single_n;
  std::string kernel = "gaussian";
  std::string bandwidth_text = "paper";
  std::string grid_text = "-3,3,601";
  std::size_t replicates = 20;
  std::size_t threads = 0;
  convergence->add_option("--dist", conv_dist, "entry distribution")->capture_default_str();
  convergence->add_option("--sizes", sizes_text, "comma-separated matrix sizes")->capture_default_str();
  convergence->add_option("--n", single_n, "single matrix size (overrides --sizes)");
  convergence->add_option("--kernel", kernel, "gaussian or cauchy")->capture_default_str();
  convergence->add_option("--bandwidth", bandwidth_text, "'paper' (n^-2/5) or a fixed value")
      ->capture_default_str();
  convergence->add_option("--grid", grid_text, "lo,hi,points for the Kolmogorov grid")
      ->capture_default_str();
  convergence->add_option("--replicates", replicates, "replicates per size")->capture_default_str();
  convergence->add_option("--seed", seed, "base seed; replicate r uses seed + r")->capture_default_str();
  convergence->add_option("--threads", threads, "worker threads (0: all cores)")->capture_default_str();
  convergence->add_option("--out", out, "output CSV (default stdout)");

  auto* identity = app.add_subcommand("identity-check", "Cauchy kernel vs Stieltjes transform");
  std::string spectrum_file;
  std::string id_bandwidth = "paper";
  std::string id_grid = "-3,3,101";
  identity->add_option("--dist", dist, "entry distribution")->capture_default_str();
  identity->add_option("--n", n, "matrix size")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  identity->add_option("--seed", seed, "random seed")->capture_default_str();
  identity->add_option("--spectrum", spectrum_file, "read eigenvalues from this CSV instead");
  identity->add_option("--bandwidth", id_bandwidth, "'paper' (n^-2/5) or a fixed value")
      ->capture_default_str();
  identity->add_option("--grid", id_grid, "lo,hi,points")->capture_default_str();

  try {
    app.parse(expand_config(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "semicircle: usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*spectrum) {
      return report(sc_run_spectrum(dist.c_str(), n, seed, out.empty() ? "-" : out.c_str(),
                                    matrix_out.empty() ? nullptr : matrix_out.c_str()));
    }

    if (*figure) {
      std::string path = "-";
      if (!out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out, ec);
        if (ec) throw UsageError("cannot create output directory '" + out + "'");
        path = (std::filesystem::path(out) / ("figure" + std::to_string(fig) + ".csv")).string();
      }
      return report(sc_run_figure(fig, seed, path.c_str()));
    }

    if (*convergence) {
      const std::vector<std::size_t> sizes =
          single_n ? std::vector<std::size_t>{*single_n} : parse_sizes(sizes_text);
      const Grid grid = parse_grid(grid_text);
      sc_convergence_config config;
      sc_convergence_config_init(&config);
      config.distribution = conv_dist.c_str();
      config.sizes = sizes.data();
      config.size_count = sizes.size();
      config.kernel = kernel.c_str();
      config.bandwidth = parse_bandwidth(bandwidth_text);
      config.grid_lo = grid.lo;
      config.grid_hi = grid.hi;
      config.grid_points = grid.points;
      config.replicates = replicates;
      config.base_seed = seed;
      config.threads = threads;
      return report(sc_run_convergence(&config, out.empty() ? "-" : out.c_str()));
    }

    if (*identity) {
      SpectrumHandle spec;
      std::size_t size = n;
      if (!spectrum_file.empty()) {
        if (sc_status s = sc_spectrum_read_csv(spectrum_file.c_str(), &spec.s); s != SC_OK)
          return report(s);
        size = sc_spectrum_size(spec.s);
      } else {
        Distribution d(dist);
        MatrixHandle m;
        if (sc_status s = sc_wigner_build(d.get(), n, seed, &m.m, nullptr); s != SC_OK)
          return report(s);
        if (sc_status s = sc_spectrum_compute(m.m, &spec.s); s != SC_OK) return report(s);
      }
      double h = parse_bandwidth(id_bandwidth);
      if (h == 0.0) {
        if (size < 2) throw UsageError("the default bandwidth needs at least 2 eigenvalues; pass --bandwidth");
        if (sc_status s = sc_bandwidth_default(size, &h); s != SC_OK) return report(s);
      }
      const auto grid = parse_grid(id_grid).values();
      double worst = 0.0;
      const sc_status s = sc_identity_check(spec.s, h, grid.data(), grid.size(), &worst);
      char line[128];
      std::snprintf(line, sizeof line, "max_abs_difference=%.17g points=%zu h=%.17g", worst,
                    grid.size(), h);
      std::cout << line << '\n';
      return report(s);
    }
  } catch (const UsageError& e) {
    std::cerr << "semicircle: usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
