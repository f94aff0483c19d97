#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "semicircle/eigensolver.hpp"
#include "semicircle/error.hpp"
#include "semicircle/estimators.hpp"
#include "semicircle/metrics.hpp"

using namespace semicircle;

namespace {

Spectrum random_spectrum(std::size_t p, std::uint64_t seed, double spread = 2.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> v(p);
  for (double& x : v) x = u(rng);
  return Spectrum(std::move(v));
}

Cdf esd_of(const Spectrum& s) {
  return [v = s.eigenvalues()](double x) { return oracle::step_cdf(v, x); };
}

}  // namespace

TEST(Kolmogorov, IdenticalIsZero) {
  const Spectrum s = random_spectrum(30, 1);
  EXPECT_EQ(kolmogorov_distance(s, s), 0.0);
  const auto grid = linear_grid(-3, 3, 301);
  EXPECT_EQ(kolmogorov_distance(Cdf(semicircle_cdf), Cdf(semicircle_cdf), grid), 0.0);
}

TEST(Kolmogorov, StepAgainstSemicircle) {
  EXPECT_NEAR(kolmogorov_distance(Spectrum({0.0}), semicircle_cdf), 0.5, 1e-16);
  EXPECT_NEAR(kolmogorov_distance(Spectrum({-1.0, 1.0}), semicircle_cdf), 0.30449889052211468, 1e-15);
  EXPECT_NEAR(kolmogorov_distance(Spectrum({-1.0, 1.0}), semicircle_cdf),
              0.5 - semicircle_cdf(-1.0), 1e-15);
}

TEST(Kolmogorov, StepExactMatchesFineGridOracle) {
  // Candidate enumeration at x and just left of every jump vs brute force on a fine grid.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Spectrum s = random_spectrum(12, seed);
    const auto& v = s.eigenvalues();
    double brute = 0.0;
    for (double mu : v)
      for (double x : {mu, std::nextafter(mu, -10.0)})
        brute = std::max(brute, std::abs(oracle::step_cdf(v, x) - semicircle_cdf(x)));
    EXPECT_NEAR(kolmogorov_distance(s, semicircle_cdf), brute, 1e-12);
  }
}

TEST(Kolmogorov, TiesAreGrouped) {
  const Spectrum s({0.0, 0.0, 0.0, 1.0});
  // Left limit at 0 is 0 and the value is 3/4 against F(0) = 1/2.
  EXPECT_NEAR(kolmogorov_distance(s, semicircle_cdf), 0.5, 1e-16);
}

TEST(Kolmogorov, SymmetricAndSpectraExact) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Spectrum a = random_spectrum(10 + seed, seed);
    const Spectrum b = random_spectrum(7 + seed, 100 + seed);
    EXPECT_NEAR(kolmogorov_distance(a, b), kolmogorov_distance(b, a), 1e-12);
    double brute = 0.0;
    for (const auto* s : {&a, &b})
      for (double t : s->eigenvalues())
        brute = std::max(brute, std::abs(oracle::step_cdf(a.eigenvalues(), t) - oracle::step_cdf(b.eigenvalues(), t)));
    EXPECT_NEAR(kolmogorov_distance(a, b), brute, 1e-15);
  }
}

TEST(Kolmogorov, SmoothCdfsWithRefinement) {
  // Normal cdfs differing by a location shift: sup at the midpoint, equal to 2 Phi(d/2) - 1.
  auto phi = [](double m) { return [m](double x) { return 0.5 * std::erfc(-(x - m) / std::sqrt(2.0)); }; };
  const auto grid = linear_grid(-5, 5, 23);  // coarse on purpose
  const double d = kolmogorov_distance(Cdf(phi(0.0)), Cdf(phi(0.4)), grid);
  EXPECT_NEAR(d, std::erf(0.2 / std::sqrt(2.0)), 1e-10);
  EXPECT_NEAR(kolmogorov_distance(Cdf(phi(0.4)), Cdf(phi(0.0)), grid), d, 1e-12);
  EXPECT_THROW(kolmogorov_distance(Cdf(phi(0.0)), Cdf(phi(0.4)), std::span<const double>{}), DomainError);
  EXPECT_THROW(kolmogorov_distance(Spectrum(), semicircle_cdf), DomainError);
}

TEST(Levy, BruteForceOracleForUnitMasses) {
  // Oracle first: 2-D scan over (eps, x).
  auto f = [](double x) { return x >= 0.0 ? 1.0 : 0.0; };
  auto g = [](double x) { return x >= 0.3 ? 1.0 : 0.0; };
  const double brute = oracle::levy_bruteforce(f, g, -2.0, 2.0, 1e-3, 1e-4);
  EXPECT_NEAR(brute, 0.3, 2e-4);

  const double exact = levy_distance(Spectrum({0.0}), Spectrum({0.3}), 1e-6);
  EXPECT_NEAR(exact, 0.3, 1e-4);
  EXPECT_NEAR(exact, brute, 2e-4);

  std::vector<double> pts;
  for (double x = -2; x <= 2; x += 1e-3) pts.push_back(x);
  EXPECT_NEAR(levy_distance(Cdf(f), Cdf(g), pts, 1e-6), 0.3, 2e-3);
}

TEST(Levy, IdenticalIsZeroAndShiftBoundedByShift) {
  const Spectrum s = random_spectrum(25, 3);
  EXPECT_EQ(levy_distance(s, s, 1e-8), 0.0);
  for (double c : {0.01, 0.1, 0.5}) EXPECT_LE(levy_distance(s, s.shifted(c), 1e-8), c + 1e-8);

  // Smooth cdf shifted by c: L <= c.
  std::vector<double> pts;
  for (double x = -3; x <= 3; x += 1e-3) pts.push_back(x);
  const double c = 0.2;
  const double l = levy_distance(Cdf(semicircle_cdf), [c](double x) { return semicircle_cdf(x - c); }, pts, 1e-6);
  EXPECT_LE(l, c + 1e-6);
  EXPECT_GT(l, 0.0);
}

TEST(Levy, MatchesBruteForceOnRandomSpectra) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Spectrum a = random_spectrum(6, seed, 1.0);
    const Spectrum b = random_spectrum(6, 50 + seed, 1.0);
    const double brute = oracle::levy_bruteforce(esd_of(a), esd_of(b), -2.5, 2.5, 5e-4, 1e-3);
    EXPECT_NEAR(levy_distance(a, b, 1e-6), brute, 2e-3) << seed;
  }
}

TEST(Levy, AtMostKolmogorov) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Spectrum a = random_spectrum(5 + seed, seed);
    const Spectrum b = random_spectrum(9 + seed, 300 + seed);
    EXPECT_LE(levy_distance(a, b, 1e-7), kolmogorov_distance(a, b) + 1e-7);
  }
}

TEST(Levy, RejectsNonMonotoneInput) {
  std::vector<double> pts{-1.0, 0.0, 1.0};
  EXPECT_THROW(levy_distance([](double x) { return x < 0 ? 0.8 : 0.2; }, Cdf(semicircle_cdf), pts, 1e-4),
               DomainError);
  EXPECT_THROW(levy_distance(Cdf(semicircle_cdf), Cdf(semicircle_cdf), pts, 0.0), DomainError);
}

TEST(SupDensityError, ClosedCases) {
  const auto grid = linear_grid(-2.0, 2.0, 401);
  EXPECT_EQ(sup_density_error(semicircle_pdf, grid), 0.0);
  EXPECT_NEAR(sup_density_error([](double) { return 0.0; }, grid), 1.0 / M_PI, 1e-16);
  EXPECT_NEAR(sup_density_error([](double x) { return semicircle_pdf(x) + 0.01; }, grid), 0.01, 1e-15);
}

TEST(SupDensityError, GridValidation) {
  EXPECT_THROW(sup_density_error(semicircle_pdf, linear_grid(-3.0, 3.0, 601)), DomainError);
  EXPECT_THROW(sup_density_error(semicircle_pdf, linear_grid(-2.0, 2.0, 101)), DomainError);
  EXPECT_THROW(sup_density_error(semicircle_pdf, linear_grid(-1.0, 2.0, 301)), DomainError);
  EXPECT_THROW(sup_density_error(semicircle_pdf, std::vector<double>{}), DomainError);
}

TEST(TraceBound, Examples) {
  const SymmetricMatrix a(10, oracle::random_symmetric(10, 1));
  const auto same = levy_cube_trace_bound(a, a);
  EXPECT_EQ(same.lhs, 0.0);
  EXPECT_EQ(same.rhs, 0.0);
  EXPECT_TRUE(same.holds);

  const auto shift = levy_cube_trace_bound(a, a.shifted(0.1));
  EXPECT_NEAR(shift.rhs, 0.01, 1e-15);
  EXPECT_LE(shift.lhs, 0.001 + 1e-6);
  EXPECT_TRUE(shift.holds);

  EXPECT_THROW(levy_cube_trace_bound(a, SymmetricMatrix(9)), DomainError);
}

TEST(TraceBound, HoldsOnRandomPairs) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> size(5, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const SymmetricMatrix a(n, oracle::random_symmetric(n, 1000 + trial));
    const SymmetricMatrix b(n, oracle::random_symmetric(n, 5000 + trial));
    const auto r = levy_cube_trace_bound(a, b);
    EXPECT_TRUE(r.holds) << "trial " << trial << " lhs=" << r.lhs << " rhs=" << r.rhs;
  }
}

TEST(RankInequality, Examples) {
  const SymmetricMatrix a(10, oracle::random_symmetric(10, 2));
  const auto same = rank_inequality_check(a, a, 0);
  EXPECT_EQ(same.sup_diff, 0.0);
  EXPECT_EQ(same.bound, 0.0);
  EXPECT_TRUE(same.holds);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const SymmetricMatrix m(10, oracle::random_symmetric(10, seed));
    SymmetricMatrix one = m;
    one.set(seed % 10, seed % 10, 5.0 * (seed % 3 == 0 ? -1 : 1));
    const auto r1 = rank_inequality_check(m, one, 1);
    EXPECT_LE(r1.sup_diff, 0.1 + 1e-12);
    EXPECT_TRUE(r1.holds);

    const SymmetricMatrix m20(20, oracle::random_symmetric(20, 100 + seed));
    SymmetricMatrix zeroed = m20;
    for (std::size_t k = 0; k < 20; ++k) zeroed.set(seed % 20, k, 0.0);
    const auto r2 = rank_inequality_check(m20, zeroed, 2);
    EXPECT_LE(r2.sup_diff, 0.1 + 1e-12);
    EXPECT_TRUE(r2.holds);
  }
  EXPECT_THROW(rank_inequality_check(a, SymmetricMatrix(3), 1), DomainError);
}
