#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "circlemap/common.hpp"
#include "circlemap/fft.hpp"
#include "circlemap/kernels.hpp"

using namespace circlemap;
using cd = std::complex<double>;

TEST_SUITE("fft") {

TEST_CASE("impulse transforms to all ones") {
  std::vector<cd> a(16, 0.0);
  a[0] = 1.0;
  fft_forward(a);
  for (auto& v : a) {
    CHECK(std::abs(v - cd(1.0, 0.0)) < 1e-15);
  }
}

TEST_CASE("single cosine lands on bins +-1") {
  const int n = 8;
  std::vector<cd> a(n);
  for (int j = 0; j < n; ++j) a[j] = std::cos(kTwoPi * j / n);
  fft_forward(a);
  CHECK(std::abs(a[1] - cd(4.0, 0.0)) < 1e-12);      // n/2
  CHECK(std::abs(a[n - 1] - cd(4.0, 0.0)) < 1e-12);  // conjugate bin
  for (int k : {0, 2, 3, 4, 5, 6}) CHECK(std::abs(a[k]) < 1e-12);
}

TEST_CASE("forward matches the naive DFT reference") {
  const int n = 256;
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cd> x(n);
  for (auto& v : x) v = cd(dist(rng), dist(rng));

  std::vector<cd> ref(n);
  dft_forward_serial(x.data(), ref.data(), n);

  std::vector<cd> a = x;
  fft_forward(a);
  double max_err = 0.0;
  for (int k = 0; k < n; ++k) max_err = std::max(max_err, std::abs(a[k] - ref[k]));
  CHECK(max_err < 1e-10);
}

TEST_CASE("omp DFT reference equals serial reference") {
  const int n = 128;
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cd> x(n);
  for (auto& v : x) v = cd(dist(rng), dist(rng));

  std::vector<cd> s(n), p(n);
  dft_forward_serial(x.data(), s.data(), n);
  dft_forward_omp(x.data(), p.data(), n);
  for (int k = 0; k < n; ++k) CHECK(s[k] == p[k]);  // byte-identical
}

TEST_CASE("inverse undoes forward up to n") {
  const int n = 64;
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cd> x(n);
  for (auto& v : x) v = cd(dist(rng), dist(rng));

  std::vector<cd> a = x;
  fft_forward(a);
  fft_inverse(a);
  double max_err = 0.0;
  for (int j = 0; j < n; ++j) max_err = std::max(max_err, std::abs(a[j] / double(n) - x[j]));
  CHECK(max_err < 1e-13);
}

}  // TEST_SUITE
