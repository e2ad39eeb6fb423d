#include "circlemap/kernels.hpp"

#include <cmath>
#include <vector>

#include "circlemap/common.hpp"

namespace circlemap {

namespace {
// 1/tan(m*dt/2) for m = 1..n/2 (index 0 unused).
std::vector<double> inv_tan_table(int n) {
  const double dt = kTwoPi / n;
  std::vector<double> itan(n / 2 + 1, 0.0);
  for (int m = 1; m <= n / 2; ++m) itan[m] = 1.0 / std::tan(0.5 * m * dt);
  return itan;
}
}  // namespace

void pv_conjugate_serial(const double* g, double* out, int n, int m0) {
  if (!is_power_of_two(n)) throw InvalidInput("pv_conjugate: n must be a power of two");
  if (m0 < 1 || m0 > n / 2) throw InvalidInput("pv_conjugate: cutoff outside [1, n/2]");
  const std::vector<double> itan = inv_tan_table(n);
  const int half = n / 2;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int m = m0; m <= half; ++m) {
      s += (g[(j - m + n) & (n - 1)] - g[(j + m) & (n - 1)]) * itan[m];
    }
    out[j] = s / n;  // dt/(2*pi) = 1/n
  }
}

void pv_conjugate_omp(const double* g, double* out, int n, int m0) {
  if (!is_power_of_two(n)) throw InvalidInput("pv_conjugate: n must be a power of two");
  if (m0 < 1 || m0 > n / 2) throw InvalidInput("pv_conjugate: cutoff outside [1, n/2]");
  const std::vector<double> itan = inv_tan_table(n);
  const int half = n / 2;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int m = m0; m <= half; ++m) {
      s += (g[(j - m + n) & (n - 1)] - g[(j + m) & (n - 1)]) * itan[m];
    }
    out[j] = s / n;
  }
}

void dft_forward_serial(const std::complex<double>* in, std::complex<double>* out, int n) {
  std::vector<std::complex<double>> tw(n);
  for (int r = 0; r < n; ++r) tw[r] = std::polar(1.0, -kTwoPi * double(r) / double(n));
  for (int k = 0; k < n; ++k) {
    std::complex<double> s(0.0, 0.0);
    long r = 0;
    for (int j = 0; j < n; ++j) {
      s += in[j] * tw[r];
      r += k;
      if (r >= n) r -= n;
    }
    out[k] = s;
  }
}

void dft_forward_omp(const std::complex<double>* in, std::complex<double>* out, int n) {
  std::vector<std::complex<double>> tw(n);
  for (int r = 0; r < n; ++r) tw[r] = std::polar(1.0, -kTwoPi * double(r) / double(n));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k) {
    std::complex<double> s(0.0, 0.0);
    long r = 0;
    for (int j = 0; j < n; ++j) {
      s += in[j] * tw[r];
      r += k;
      if (r >= n) r -= n;
    }
    out[k] = s;
  }
}

double increment_sup_serial(const double* g, int n, int m) {
  double best = 0.0;
  for (int j = 0; j < n; ++j) {
    const double d = std::abs(g[(j + m) % n] - g[j]);
    if (d > best) best = d;
  }
  return best;
}

double increment_sup_omp(const double* g, int n, int m) {
  double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (int j = 0; j < n; ++j) {
    const double d = std::abs(g[(j + m) % n] - g[j]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace circlemap
