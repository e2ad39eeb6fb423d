// Benchmark comparing the serial reference kernels against the OpenMP
// variants, and the radix-2 FFT against the naive DFT. Also asserts that the
// parallel outputs are byte-identical to the serial ones.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circlemap/fft.hpp"
#include "circlemap/kernels.hpp"

using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

template <class F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clk::now();
    body();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel variants run serially\n");
#endif

  std::mt19937 rng(20260819u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  std::printf("\npv_conjugate: serial vs omp (full kernel, m0 = 1)\n");
  std::printf("%8s %12s %12s %8s %10s\n", "n", "serial[s]", "omp[s]", "speedup", "identical");
  for (int n : {1024, 4096, 16384}) {
    std::vector<double> g(n), out_s(n), out_p(n);
    for (double& x : g) x = dist(rng);
    const double ts = time_best_of(3, [&] { circlemap::pv_conjugate_serial(g.data(), out_s.data(), n, 1); });
    const double tp = time_best_of(3, [&] { circlemap::pv_conjugate_omp(g.data(), out_p.data(), n, 1); });
    const bool same = std::memcmp(out_s.data(), out_p.data(), n * sizeof(double)) == 0;
    std::printf("%8d %12.6f %12.6f %8.2f %10s\n", n, ts, tp, ts / tp, same ? "yes" : "NO");
    if (!same) return 1;
  }

  std::printf("\ndft_forward: serial vs omp vs radix-2 fft\n");
  std::printf("%8s %12s %12s %12s %8s %10s\n", "n", "serial[s]", "omp[s]", "fft[s]", "speedup", "identical");
  for (int n : {256, 1024, 4096}) {
    std::vector<std::complex<double>> x(n), out_s(n), out_p(n);
    for (auto& v : x) v = {dist(rng), dist(rng)};
    const double ts = time_best_of(3, [&] { circlemap::dft_forward_serial(x.data(), out_s.data(), n); });
    const double tp = time_best_of(3, [&] { circlemap::dft_forward_omp(x.data(), out_p.data(), n); });
    std::vector<std::complex<double>> xf;
    const double tf = time_best_of(3, [&] {
      xf = x;
      circlemap::fft_forward(xf);
    });
    const bool same = std::memcmp(out_s.data(), out_p.data(), n * sizeof(std::complex<double>)) == 0;
    double gap = 0.0;
    for (int k = 0; k < n; ++k) gap = std::max(gap, std::abs(xf[k] - out_s[k]));
    std::printf("%8d %12.6f %12.6f %12.6f %8.2f %10s (fft vs dft sup %.2e)\n", n, ts, tp, tf,
                ts / tp, same ? "yes" : "NO", gap);
    if (!same || gap > 1e-8 * n) return 1;
  }

  std::printf("\nincrement_sup: serial vs omp\n");
  std::printf("%8s %12s %12s %8s %10s\n", "n", "serial[s]", "omp[s]", "speedup", "identical");
  for (int n : {16384, 65536}) {
    std::vector<double> g(n);
    for (double& x : g) x = dist(rng);
    double vs = 0.0, vp = 0.0;
    const double ts = time_best_of(3, [&] {
      vs = 0.0;
      for (int m = 1; m <= 64; ++m) vs = std::max(vs, circlemap::increment_sup_serial(g.data(), n, m));
    });
    const double tp = time_best_of(3, [&] {
      vp = 0.0;
      for (int m = 1; m <= 64; ++m) vp = std::max(vp, circlemap::increment_sup_omp(g.data(), n, m));
    });
    const bool same = std::memcmp(&vs, &vp, sizeof(double)) == 0;
    std::printf("%8d %12.6f %12.6f %8.2f %10s\n", n, ts, tp, ts / tp, same ? "yes" : "NO");
    if (!same) return 1;
  }

  std::printf("\nall parallel kernels byte-identical to serial references\n");
  return 0;
}
