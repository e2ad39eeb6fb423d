#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "circlemap/analysis.hpp"
#include "circlemap/common.hpp"
#include "circlemap/conjugation.hpp"
#include "circlemap/series.hpp"

using namespace circlemap;

namespace {

GridFunction sampled(int n, double (*fn)(double)) {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = fn(kTwoPi * j / n);
  return GridFunction::from_real(v);
}

}  // namespace

TEST_CASE("total_variation: constants have zero variation") {
  CHECK(total_variation(GridFunction::from_real(std::vector<double>(64, 3.25))) == 0.0);
}

TEST_CASE("total_variation: sin has variation exactly 4 on dyadic grids") {
  // The grid hits the extrema of sin, so the cyclic sum telescopes to 4.
  auto g = sampled(4096, [](double t) { return std::sin(t); });
  CHECK(total_variation(g) == doctest::Approx(4.0).epsilon(1e-13));
  auto g2 = sampled(512, [](double t) { return std::sin(t); });
  CHECK(total_variation(g2) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("total_variation: invariant under additive constants, subadditive") {
  const int n = 256;
  std::mt19937 rng(10u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> a(n), b(n), shifted(n), sum(n);
  for (int j = 0; j < n; ++j) {
    a[j] = dist(rng);
    b[j] = dist(rng);
    shifted[j] = a[j] + 17.5;
    sum[j] = a[j] + b[j];
  }
  const double tva = total_variation(GridFunction::from_real(a));
  // invariance up to rounding of the shifted samples
  CHECK(total_variation(GridFunction::from_real(shifted)) == doctest::Approx(tva).epsilon(1e-12));
  CHECK(total_variation(GridFunction::from_real(sum)) <=
        tva + total_variation(GridFunction::from_real(b)) + 1e-12);
}

TEST_CASE("total_variation: grid refinement never decreases it for continuous data") {
  auto coarse = sampled(256, [](double t) { return std::sin(t) + 0.3 * std::cos(5 * t); });
  auto fine = sampled(1024, [](double t) { return std::sin(t) + 0.3 * std::cos(5 * t); });
  CHECK(total_variation(fine) >= total_variation(coarse) - 1e-12);
}

TEST_CASE("total_variation: complex data is rejected") {
  GridFunction g = GridFunction::zeros(32);
  g.values[3] = {0.0, 1.0};
  g.real_flag = false;
  CHECK_THROWS_AS(total_variation(g), InvalidInput);
}

TEST_CASE("modulus_of_continuity: exact for cos at delta = pi") {
  auto g = sampled(1024, [](double t) { return std::cos(t); });
  auto om = modulus_of_continuity(g, {kTwoPi / 1024, 0.5, kPi});
  REQUIRE(om.size() == 3);
  CHECK(om[2] == doctest::Approx(2.0).epsilon(1e-14));  // antipodal nodes hit +-1
  CHECK(om[0] <= om[1]);
  CHECK(om[1] <= om[2]);
  CHECK(om[0] == doctest::Approx(std::sin(kTwoPi / 1024)).epsilon(1e-6));  // ~ delta near t=pi/2
}

TEST_CASE("modulus_of_continuity: zero for constants, monotone in delta") {
  auto g = GridFunction::from_real(std::vector<double>(128, -2.0));
  auto om = modulus_of_continuity(g, {0.1, 0.5, 1.0, 3.0});
  for (double w : om) CHECK(w == 0.0);
}

TEST_CASE("modulus_of_continuity: delta below the grid spacing is rejected") {
  auto g = GridFunction::zeros(64);
  CHECK_THROWS_AS(modulus_of_continuity(g, {0.5 * kTwoPi / 64}), InvalidInput);
}

TEST_CASE("log_modulus_statistic: frozen value for the identity map") {
  // omega(delta) = delta, and delta log(1/delta) increases up to 1/e, so the
  // sup over dyadic delta in [2*pi/n, 2*pi/32] sits at delta = 2*pi/32,
  // independent of n >= 32.
  for (int n : {64, 1024, 4096}) {
    auto h = CircleHomeomorphism::identity(n);
    CHECK(log_modulus_statistic(h) == doctest::Approx(0.31962933509282814).epsilon(1e-13));
  }
}

TEST_CASE("log_modulus_statistic: requires at least 32 nodes") {
  CHECK_THROWS_AS(log_modulus_statistic(CircleHomeomorphism::identity(16)), InvalidInput);
  CHECK_NOTHROW(log_modulus_statistic(CircleHomeomorphism::identity(32)));
}

TEST_CASE("sobolev_half: closed forms for pure harmonics") {
  auto g1 = sampled(256, [](double t) { return std::cos(t); });
  CHECK(sobolev_half(analyze(g1)) == doctest::Approx(0.5).epsilon(1e-13));
  auto g2 = sampled(256, [](double t) { return std::sin(2 * t); });
  CHECK(sobolev_half(analyze(g2)) == doctest::Approx(1.0).epsilon(1e-13));
  auto g3 = sampled(256, [](double t) { return std::cos(t) + 0.5 * std::sin(2 * t); });
  CHECK(sobolev_half(analyze(g3)) == doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("sobolev_half: invariant under conjugation") {
  std::mt19937 rng(91u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FourierSeries s(40, true);
  for (int k = 1; k <= 40; ++k) {
    std::complex<double> c{dist(rng) / k, dist(rng) / k};
    s.c(k) = c;
    s.c(-k) = std::conj(c);
  }
  CHECK(sobolev_half(conjugate_spectral(s)) == doctest::Approx(sobolev_half(s)).epsilon(1e-15));
}

TEST_CASE("sobolev_band_partials: cumulative and consistent with the total") {
  auto g = sampled(512, [](double t) { return std::cos(t) + 0.5 * std::sin(2 * t) + 0.1 * std::cos(9 * t); });
  auto s = analyze(g);
  auto parts = sobolev_band_partials(s);
  REQUIRE_FALSE(parts.empty());
  for (size_t i = 1; i < parts.size(); ++i) CHECK(parts[i] >= parts[i - 1] - 1e-15);
  CHECK(parts.back() == doctest::Approx(sobolev_half(s)).epsilon(1e-13));
}

TEST_CASE("decay_profile: band maxima of |k c_k| for pure harmonics") {
  auto g = sampled(256, [](double t) { return std::cos(t) + std::sin(2 * t); });
  auto d = decay_profile(analyze(g));
  REQUIRE(d.band_max.size() >= 2);
  CHECK(d.band_max[0] == doctest::Approx(0.5).epsilon(1e-13));  // k=1: 1 * 1/2
  CHECK(d.band_max[1] == doctest::Approx(1.0).epsilon(1e-13));  // k=2: 2 * 1/2
  CHECK(d.global_sup == doctest::Approx(1.0).epsilon(1e-13));
  for (size_t i = 2; i < d.band_max.size(); ++i) CHECK(d.band_max[i] < 1e-12);
}

TEST_CASE("stieltjes_pairing: energy identity for pure harmonics") {
  // (1/2pi) integral of g d(conjugate g) = sum |c_k|^2 |k|
  const int n = 4096;
  auto g1 = sampled(n, [](double t) { return std::cos(t); });
  auto p1 = stieltjes_pairing(g1, conjugate_spectral_grid(g1));
  CHECK(std::abs(p1 - 0.5) < 1e-6);
  auto g2 = sampled(n, [](double t) { return std::sin(2 * t); });
  auto p2 = stieltjes_pairing(g2, conjugate_spectral_grid(g2));
  CHECK(std::abs(p2 - 1.0) < 1e-6);
}

TEST_CASE("stieltjes_pairing: matches sobolev_half for random trigonometric polynomials") {
  const int n = 4096;
  for (unsigned seed : {1u, 2u, 3u}) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    FourierSeries s(32, true);
    for (int k = 1; k <= 32; ++k) {
      std::complex<double> c{dist(rng) / (k * k), dist(rng) / (k * k)};
      s.c(k) = c;
      s.c(-k) = std::conj(c);
    }
    auto g = synthesize(s, n);
    const double pair = stieltjes_pairing(g, conjugate_spectral_grid(g));
    const double want = sobolev_half(s);
    CHECK(pair > 0.0);
    CHECK(std::abs(pair - want) < 1e-6);
  }
}

TEST_CASE("stieltjes_pairing: input validation") {
  auto g = sampled(64, [](double t) { return std::cos(t); });
  auto h = sampled(128, [](double t) { return std::sin(t); });
  CHECK_THROWS_AS(stieltjes_pairing(g, h), InvalidInput);
  GridFunction c = GridFunction::zeros(64);
  c.values[0] = {0.0, 1.0};
  c.real_flag = false;
  CHECK_THROWS_AS(stieltjes_pairing(g, c), InvalidInput);
}

TEST_CASE("fejer_conjugate_sup: frozen closed forms for the inv_log rule") {
  EpsilonRule rule;  // inv_log, offset 2
  const int n = 4096;
  auto [c2, f2] = fejer_conjugate_sup(rule, 2, n);
  CHECK(f2 == doctest::Approx(0.45511961331341870).epsilon(1e-13));
  auto [c16, f16] = fejer_conjugate_sup(rule, 16, n);
  CHECK(f16 == doctest::Approx(1.6906834770678614).epsilon(1e-13));
  auto [c64, f64] = fejer_conjugate_sup(rule, 64, n);
  CHECK(f64 == doctest::Approx(2.2353107735166131).epsilon(1e-13));
  auto [c256, f256] = fejer_conjugate_sup(rule, 256, n);
  CHECK(f256 == doctest::Approx(2.6146017123241403).epsilon(1e-13));
  // the computed grid sup reproduces the closed form (the extremum is a node)
  CHECK(std::abs(c2 - f2) < 1e-10);
  CHECK(std::abs(c16 - f16) < 1e-10);
  CHECK(std::abs(c64 - f64) < 1e-10);
  CHECK(std::abs(c256 - f256) < 1e-10);
}

TEST_CASE("fejer_conjugate_sup: grows without bound along N") {
  EpsilonRule rule;
  double prev = 0.0;
  for (int N : {16, 64, 256, 1024}) {
    auto [computed, closed] = fejer_conjugate_sup(rule, N, 4096);
    CHECK(closed > prev);
    CHECK(computed > prev);
    prev = closed;
  }
  CHECK(prev > 2.89);  // closed form at N = 1024 is 2.8933...
}

TEST_CASE("fejer_conjugate_sup: input validation") {
  EpsilonRule rule;
  CHECK_THROWS_AS(fejer_conjugate_sup(rule, 1, 4096), InvalidInput);
  CHECK_THROWS_AS(fejer_conjugate_sup(rule, 256, 512), InvalidInput);  // n < 2(N+1)
}
