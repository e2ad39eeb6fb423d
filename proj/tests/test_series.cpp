#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "circlemap/common.hpp"
#include "circlemap/series.hpp"

using namespace circlemap;
using cd = std::complex<double>;

namespace {
GridFunction sample_real(int n, double (*fn)(double)) {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = fn(kTwoPi * j / n);
  return GridFunction::from_real(std::move(v));
}
}  // namespace

TEST_SUITE("series") {

TEST_CASE("analyze of cos t at n=8 gives c(+-1) = 0.5") {
  auto s = analyze(sample_real(8, [](double t) { return std::cos(t); }));
  CHECK(s.max_freq == 3);
  CHECK(std::abs(s.c(1) - cd(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(s.c(-1) - cd(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(s.c(0)) < 1e-15);
  CHECK(std::abs(s.c(2)) < 1e-15);
  CHECK(s.real_flag);
}

TEST_CASE("analyze of the constant gives only the DC term") {
  auto s = analyze(GridFunction::from_real(std::vector<double>(16, 1.0)));
  CHECK(std::abs(s.c(0) - cd(1.0, 0.0)) < 1e-15);
  for (int k = 1; k <= s.max_freq; ++k) {
    CHECK(std::abs(s.c(k)) < 1e-15);
    CHECK(std::abs(s.c(-k)) < 1e-15);
  }
}

TEST_CASE("analyze of sin 2t at n=16 gives c(2) = -i/2") {
  auto s = analyze(sample_real(16, [](double t) { return std::sin(2 * t); }));
  CHECK(std::abs(s.c(2) - cd(0.0, -0.5)) < 1e-15);
  CHECK(std::abs(s.c(-2) - cd(0.0, 0.5)) < 1e-15);
}

TEST_CASE("synthesize of c(+-1)=0.5 reproduces cos samples") {
  FourierSeries s(1);
  s.c(1) = 0.5;
  s.c(-1) = 0.5;
  auto g = synthesize(s, 8);
  for (int j = 0; j < 8; ++j) {
    CHECK(g.real_at(j) == doctest::Approx(std::cos(kTwoPi * j / 8)).epsilon(1e-14));
  }
}

TEST_CASE("synthesize of the empty series is zero") {
  FourierSeries s(0);
  auto g = synthesize(s, 8);
  for (int j = 0; j < 8; ++j) CHECK(g.real_at(j) == 0.0);
}

TEST_CASE("round-trip on a random Hermitian series, M=31, n=128") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FourierSeries s(31);
  s.c(0) = dist(rng);
  for (int k = 1; k <= 31; ++k) {
    cd c(dist(rng), dist(rng));
    s.c(k) = c;
    s.c(-k) = std::conj(c);
  }
  auto back = analyze(synthesize(s, 128));
  double max_err = 0.0;
  for (int k = -31; k <= 31; ++k) max_err = std::max(max_err, std::abs(back.c(k) - s.c(k)));
  CHECK(max_err < 1e-12);
  for (int k = 32; k <= back.max_freq; ++k) CHECK(std::abs(back.c(k)) < 1e-12);
}

TEST_CASE("analyze of real samples is Hermitian") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(64);
  for (auto& x : v) x = dist(rng);
  auto s = analyze(GridFunction::from_real(std::move(v)));
  for (int k = 1; k <= s.max_freq; ++k) {
    CHECK(std::abs(s.c(-k) - std::conj(s.c(k))) < 1e-12);
  }
}

TEST_CASE("synthesize rejects n below 2(M+1)") {
  FourierSeries s(31);
  CHECK_THROWS_AS(synthesize(s, 32), InvalidInput);
  CHECK_NOTHROW(synthesize(s, 64));
}

TEST_CASE("grid function validation") {
  CHECK_THROWS_AS(GridFunction::from_real(std::vector<double>(12, 0.0)), InvalidInput);  // not a power of two
  CHECK_THROWS_AS(GridFunction::from_real(std::vector<double>(4, 0.0)), InvalidInput);   // below minimum
  CHECK_THROWS_AS(GridFunction::from_real(std::vector<double>{1.0, 2.0, std::nan(""), 0.0, 1, 2, 3, 4}),
                  InvalidInput);
}

TEST_CASE("synthesize_at matches grid synthesis on nodes") {
  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FourierSeries s(7);
  s.c(0) = dist(rng);
  for (int k = 1; k <= 7; ++k) {
    cd c(dist(rng), dist(rng));
    s.c(k) = c;
    s.c(-k) = std::conj(c);
  }
  auto g = synthesize(s, 32);
  for (int j = 0; j < 32; ++j) {
    CHECK(synthesize_at(s, kTwoPi * j / 32) == doctest::Approx(g.real_at(j)).epsilon(1e-12));
  }
}

}  // TEST_SUITE

TEST_SUITE("homeomorphism") {

TEST_CASE("identity lift interpolates to the input") {
  auto h = CircleHomeomorphism::identity(64);
  CHECK(interpolate_homeomorphism(h, 1.2345) == doctest::Approx(1.2345).epsilon(1e-15));
}

TEST_CASE("interpolation reproduces lift values at nodes") {
  const int n = 32;
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) u[j] = 0.1 * std::sin(kTwoPi * j / n);
  auto h = CircleHomeomorphism::from_u(u);
  for (int j = 0; j < n; ++j) {
    CHECK(interpolate_homeomorphism(h, kTwoPi * j / n) == doctest::Approx(h.lift[j]).epsilon(1e-15));
  }
}

TEST_CASE("piecewise-linear lift matches the closed form h(t) = t + 0.1 sin t") {
  const int n = 1024;
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) u[j] = 0.1 * std::sin(kTwoPi * j / n);
  auto h = CircleHomeomorphism::from_u(u);
  // frozen closed form: pi/3 + 0.1 sin(pi/3) = 1.1338000915750416
  CHECK(std::abs(interpolate_homeomorphism(h, kPi / 3) - 1.1338000915750416) < 1e-5);
}

TEST_CASE("equivariance interp(t + 2 pi) = interp(t) + 2 pi") {
  const int n = 64;
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) u[j] = 0.2 * std::cos(kTwoPi * j / n);
  auto h = CircleHomeomorphism::from_u(u);
  for (double t : {-9.7, -0.1, 0.0, 2.5, 13.4}) {
    CHECK(interpolate_homeomorphism(h, t + kTwoPi) ==
          doctest::Approx(interpolate_homeomorphism(h, t) + kTwoPi).epsilon(1e-13));
  }
}

TEST_CASE("lift wrap and degree-one invariants") {
  auto h = CircleHomeomorphism::identity(16);
  CHECK(h.lift.size() == 17);
  CHECK(h.lift[16] == h.lift[0] + kTwoPi);
  CHECK(h.strictly_increasing());
  CHECK(h.min_relative_slope() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("from_u rejects non-monotone data") {
  std::vector<double> u(8, 0.0);
  u[3] = -2.0;  // forces a decreasing lift segment
  CHECK_THROWS_AS(CircleHomeomorphism::from_u(u), InvalidInput);
}

}  // TEST_SUITE
