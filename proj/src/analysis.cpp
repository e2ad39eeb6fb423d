#include "circlemap/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "circlemap/conjugation.hpp"
#include "circlemap/kernels.hpp"

namespace circlemap {

double total_variation(const GridFunction& g) {
  g.validate();
  if (!g.real_flag) throw InvalidInput("total_variation: real input required");
  const int n = g.n;
  double tv = 0.0;
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    tv += std::abs(g.real_at(k) - g.real_at(j));
  }
  return tv;
}

std::vector<double> modulus_of_continuity(const GridFunction& g, const std::vector<double>& deltas) {
  g.validate();
  if (!g.real_flag) throw InvalidInput("modulus_of_continuity: real input required");
  const int n = g.n;
  const double dt = kTwoPi / n;
  const std::vector<double> vals = g.real_values();
  std::vector<double> out(deltas.size(), 0.0);
  for (size_t q = 0; q < deltas.size(); ++q) {
    const double delta = deltas[q];
    if (delta < dt * (1.0 - 1e-12))
      throw InvalidInput("modulus_of_continuity: delta below grid resolution");
    const int m_max = std::min<long>(n / 2, static_cast<long>(std::floor(delta / dt * (1.0 + 1e-12))));
    double w = 0.0;
    for (int m = 1; m <= m_max; ++m) w = std::max(w, increment_sup_omp(vals.data(), n, m));
    out[q] = w;
  }
  return out;
}

double log_modulus_statistic(const CircleHomeomorphism& h) {
  h.validate();
  const int n = h.n;
  if (n < 32) throw InvalidInput("log_modulus_statistic: n must be >= 32");
  // Dyadic delta = 2*pi*2^{-j} in [2*pi/n, 1/4]: j runs from 5 (first scale
  // at or below 1/4) to log2(n) (one grid spacing). The lift is monotone, so
  // the modulus at gap m is the largest lift increment over m nodes.
  int log2n = 0;
  while ((1 << (log2n + 1)) <= n) ++log2n;
  double stat = 0.0;
  for (int j = 5; j <= log2n; ++j) {
    const int m = n >> j;
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
      const int k = i + m;
      const double inc = k <= n ? h.lift[k] - h.lift[i] : h.lift[k - n] + kTwoPi - h.lift[i];
      w = std::max(w, inc);
    }
    const double delta = kTwoPi / double(1 << j);
    stat = std::max(stat, w * std::log(1.0 / delta));
  }
  return stat;
}

double sobolev_half(const FourierSeries& s) {
  double sum = 0.0;
  for (int k = -s.max_freq; k <= s.max_freq; ++k) sum += std::norm(s.c(k)) * std::abs(k);
  return sum;
}

std::vector<double> sobolev_band_partials(const FourierSeries& s) {
  const int M = s.max_freq;
  std::vector<double> bands;
  for (long lo = 1; lo <= M; lo *= 2) {
    const long hi = std::min<long>(2 * lo - 1, M);
    double p = 0.0;
    for (long k = lo; k <= hi; ++k) p += (std::norm(s.c(int(k))) + std::norm(s.c(int(-k)))) * double(k);
    bands.push_back(p);
  }
  for (size_t m = 1; m < bands.size(); ++m) bands[m] += bands[m - 1];
  return bands;
}

DecayProfile decay_profile(const FourierSeries& s) {
  DecayProfile out;
  const int M = s.max_freq;
  for (long lo = 1; lo <= M; lo *= 2) {
    const long hi = std::min<long>(2 * lo - 1, M);
    double bm = 0.0;
    for (long k = lo; k <= hi; ++k) {
      bm = std::max(bm, double(k) * std::abs(s.c(int(k))));
      bm = std::max(bm, double(k) * std::abs(s.c(int(-k))));
    }
    out.band_max.push_back(bm);
    out.global_sup = std::max(out.global_sup, bm);
  }
  return out;
}

double stieltjes_pairing(const GridFunction& g, const GridFunction& gt) {
  g.validate();
  gt.validate();
  if (!g.real_flag || !gt.real_flag) throw InvalidInput("stieltjes_pairing: real input required");
  if (g.n != gt.n) throw InvalidInput("stieltjes_pairing: grids must match");
  const int n = g.n;
  // Midpoint evaluation of the integrand: g at s_j = t_j + dt/2 by
  // trigonometric interpolation (the odd nodes of the doubled grid).
  const GridFunction fine = synthesize(analyze(g), 2 * n);
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    sum += fine.values[2 * j + 1].real() * (gt.real_at(k) - gt.real_at(j));
  }
  return sum / kTwoPi;
}

std::pair<double, double> fejer_conjugate_sup(const EpsilonRule& rule, int N, int n) {
  rule.validate();
  if (N < 2) throw InvalidInput("fejer_conjugate_sup: N must be >= 2");
  if (!is_power_of_two(n) || n < 2 * (N + 1))
    throw InvalidInput("fejer_conjugate_sup: n must be a power of two >= 2(N+1)");
  // g = sum_{m=1..N} eps(m)/m sin(mt): c_m = -i eps(m)/(2m), c_{-m} = conj.
  FourierSeries s(N, true);
  for (int m = 1; m <= N; ++m) {
    const double a = rule.eps(m) / (2.0 * m);
    s.c(m) = std::complex<double>(0.0, -a);
    s.c(-m) = std::complex<double>(0.0, a);
  }
  const GridFunction vals = synthesize(fejer_sum(conjugate_spectral(s), N), n);
  double sup = 0.0;
  for (int j = 0; j < n; ++j) sup = std::max(sup, std::abs(vals.real_at(j)));
  double closed = 0.0;
  for (int m = 1; m <= N; ++m) closed += rule.eps(m) / m * (1.0 - double(m) / N);
  return {sup, closed};
}

}  // namespace circlemap
