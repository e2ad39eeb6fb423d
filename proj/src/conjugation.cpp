#include "circlemap/conjugation.hpp"

#include <cmath>

#include "circlemap/fft.hpp"
#include "circlemap/kernels.hpp"

namespace circlemap {

FourierSeries conjugate_spectral(const FourierSeries& s) {
  FourierSeries out(s.max_freq, s.real_flag);
  const std::complex<double> mi(0.0, -1.0);
  for (int k = -s.max_freq; k <= s.max_freq; ++k) {
    if (k > 0)
      out.c(k) = mi * s.c(k);
    else if (k < 0)
      out.c(k) = -mi * s.c(k);
    else
      out.c(0) = 0.0;
  }
  return out;
}

GridFunction conjugate_spectral_grid(const GridFunction& g) {
  g.validate();
  return synthesize(conjugate_spectral(analyze(g)), g.n);
}

std::vector<double> conjugate_grid_values(const std::vector<double>& g) {
  const int n = static_cast<int>(g.size());
  if (!is_power_of_two(n) || n < 8) throw InvalidInput("conjugate_grid_values: n must be a power of two >= 8");
  std::vector<std::complex<double>> x(n);
  for (int j = 0; j < n; ++j) x[j] = g[j];
  fft_forward(x);
  // Multiplier -i sgn(k); DC and Nyquist bins are dropped (mean-zero K, and
  // analyze() keeps only |k| <= n/2 - 1).
  x[0] = 0.0;
  x[n / 2] = 0.0;
  const std::complex<double> mi(0.0, -1.0);
  for (int k = 1; k < n / 2; ++k) {
    x[k] *= mi;
    x[n - k] *= -mi;
  }
  fft_inverse(x);
  std::vector<double> out(n);
  const double inv_n = 1.0 / n;
  for (int j = 0; j < n; ++j) out[j] = x[j].real() * inv_n;
  return out;
}

GridFunction conjugate_quadrature(const GridFunction& g, double eps) {
  g.validate();
  if (!g.real_flag) throw InvalidInput("conjugate_quadrature: real input required");
  const int n = g.n;
  const double dt = kTwoPi / n;
  if (eps < dt * (1.0 - 1e-12)) throw InvalidInput("conjugate_quadrature: eps must be >= grid spacing");
  const int m0 = std::max(1, static_cast<int>(std::ceil(eps / dt - 1e-9)));
  std::vector<double> in = g.real_values();
  std::vector<double> out(n);
  pv_conjugate_omp(in.data(), out.data(), n, m0);
  std::vector<std::complex<double>> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = out[j];
  return GridFunction(n, std::move(vals), true);
}

FourierSeries fejer_sum(const FourierSeries& s, int N) {
  if (N < 1) throw InvalidInput("fejer_sum: N must be >= 1");
  FourierSeries out(s.max_freq, s.real_flag);
  for (int k = -s.max_freq; k <= s.max_freq; ++k) {
    const double w = 1.0 - double(std::abs(k)) / N;
    out.c(k) = w > 0.0 ? s.c(k) * w : 0.0;
  }
  return out;
}

FourierSeries partial_sum(const FourierSeries& s, int N) {
  if (N < 0) throw InvalidInput("partial_sum: N must be >= 0");
  FourierSeries out(s.max_freq, s.real_flag);
  for (int k = -s.max_freq; k <= s.max_freq; ++k) {
    out.c(k) = std::abs(k) <= N ? s.c(k) : 0.0;
  }
  return out;
}

}  // namespace circlemap
