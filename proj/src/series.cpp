#include "circlemap/series.hpp"

#include <cmath>

#include "circlemap/fft.hpp"

namespace circlemap {

namespace {
void require(bool cond, const char* msg) {
  if (!cond) throw InvalidInput(msg);
}
}  // namespace

GridFunction::GridFunction(int n_, std::vector<std::complex<double>> v, bool real)
    : n(n_), values(std::move(v)), real_flag(real) {
  validate();
}

GridFunction GridFunction::from_real(std::vector<double> v) {
  GridFunction g;
  g.n = static_cast<int>(v.size());
  g.values.reserve(v.size());
  for (double x : v) g.values.emplace_back(x, 0.0);
  g.real_flag = true;
  g.validate();
  return g;
}

GridFunction GridFunction::zeros(int n) {
  GridFunction g;
  g.n = n;
  g.values.assign(n, std::complex<double>(0.0, 0.0));
  g.real_flag = true;
  g.validate();
  return g;
}

std::vector<double> GridFunction::real_values() const {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = values[j].real();
  return v;
}

void GridFunction::validate() const {
  require(is_power_of_two(n) && n >= 8, "GridFunction: n must be a power of two, n >= 8");
  require(static_cast<int>(values.size()) == n, "GridFunction: values size mismatch");
  for (const auto& v : values) {
    require(std::isfinite(v.real()) && std::isfinite(v.imag()), "GridFunction: non-finite sample");
    if (real_flag) require(v.imag() == 0.0, "GridFunction: real_flag with nonzero imaginary part");
  }
}

std::vector<double> grid_nodes(int n) {
  std::vector<double> t(n);
  for (int j = 0; j < n; ++j) t[j] = kTwoPi * j / n;
  return t;
}

FourierSeries::FourierSeries(int M, bool real) : max_freq(M), real_flag(real) {
  if (M < 0) throw InvalidInput("FourierSeries: negative max_freq");
  coeffs.assign(2 * M + 1, std::complex<double>(0.0, 0.0));
}

void FourierSeries::validate() const {
  require(max_freq >= 0 && static_cast<int>(coeffs.size()) == 2 * max_freq + 1,
          "FourierSeries: coefficient storage mismatch");
  for (const auto& v : coeffs) {
    require(std::isfinite(v.real()) && std::isfinite(v.imag()), "FourierSeries: non-finite coefficient");
  }
  if (real_flag) {
    for (int k = 0; k <= max_freq; ++k) {
      require(std::abs(c(-k) - std::conj(c(k))) <= 1e-12, "FourierSeries: real_flag violated");
    }
  }
}

FourierSeries analyze(const GridFunction& g) {
  const int n = g.n;
  std::vector<std::complex<double>> a = g.values;
  fft_forward(a);
  const int M = n / 2 - 1;
  FourierSeries s(M, g.real_flag);
  const double inv_n = 1.0 / n;
  s.c(0) = a[0] * inv_n;
  for (int k = 1; k <= M; ++k) {
    s.c(k) = a[k] * inv_n;
    s.c(-k) = a[n - k] * inv_n;
  }
  return s;
}

GridFunction synthesize(const FourierSeries& s, int n) {
  if (!is_power_of_two(n) || n < 8) throw InvalidInput("synthesize: n must be a power of two, n >= 8");
  if (n < 2 * (s.max_freq + 1)) throw InvalidInput("synthesize: n too small for max_freq");
  std::vector<std::complex<double>> a(n, std::complex<double>(0.0, 0.0));
  a[0] = s.c(0);
  for (int k = 1; k <= s.max_freq; ++k) {
    a[k] = s.c(k);
    a[n - k] = s.c(-k);
  }
  fft_inverse(a);  // unnormalized inverse of unit-coefficient spectrum: no 1/n here
  GridFunction g;
  g.n = n;
  g.real_flag = s.real_flag;
  g.values.resize(n);
  for (int j = 0; j < n; ++j) {
    g.values[j] = s.real_flag ? std::complex<double>(a[j].real(), 0.0) : a[j];
  }
  g.validate();
  return g;
}

double synthesize_at(const FourierSeries& s, double t) {
  std::complex<double> acc = s.c(0);
  for (int k = 1; k <= s.max_freq; ++k) {
    const std::complex<double> e(std::cos(k * t), std::sin(k * t));
    acc += s.c(k) * e + s.c(-k) * std::conj(e);
  }
  return acc.real();
}

CircleHomeomorphism CircleHomeomorphism::identity(int n) {
  CircleHomeomorphism h;
  h.n = n;
  h.lift = grid_nodes(n);
  h.lift.push_back(kTwoPi);
  h.validate();
  return h;
}

CircleHomeomorphism CircleHomeomorphism::from_u(const std::vector<double>& u) {
  CircleHomeomorphism h;
  h.n = static_cast<int>(u.size());
  h.lift = grid_nodes(h.n);
  for (int j = 0; j < h.n; ++j) h.lift[j] += u[j];
  h.lift.push_back(h.lift[0] + kTwoPi);
  h.validate();
  return h;
}

std::vector<double> CircleHomeomorphism::u() const {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = lift[j] - kTwoPi * j / n;
  return v;
}

bool CircleHomeomorphism::strictly_increasing() const {
  for (int j = 0; j < n; ++j) {
    if (!(lift[j + 1] > lift[j])) return false;
  }
  return true;
}

double CircleHomeomorphism::min_relative_slope() const {
  const double dt = kTwoPi / n;
  double m = (lift[1] - lift[0]) / dt;
  for (int j = 1; j < n; ++j) m = std::min(m, (lift[j + 1] - lift[j]) / dt);
  return m;
}

void CircleHomeomorphism::validate() const {
  require(is_power_of_two(n) && n >= 8, "CircleHomeomorphism: n must be a power of two, n >= 8");
  require(static_cast<int>(lift.size()) == n + 1, "CircleHomeomorphism: lift size mismatch");
  for (double v : lift) require(std::isfinite(v), "CircleHomeomorphism: non-finite lift");
  require(lift[n] == lift[0] + kTwoPi, "CircleHomeomorphism: lift[n] != lift[0] + 2*pi");
  require(strictly_increasing(), "CircleHomeomorphism: lift not strictly increasing");
}

double interpolate_homeomorphism(const CircleHomeomorphism& h, double t) {
  const double cycles = std::floor(t / kTwoPi);
  const double tb = t - cycles * kTwoPi;  // in [0, 2*pi)
  const double dt = kTwoPi / h.n;
  int j = static_cast<int>(tb / dt);
  if (j >= h.n) j = h.n - 1;
  const double frac = (tb - j * dt) / dt;
  const double base = h.lift[j] + frac * (h.lift[j + 1] - h.lift[j]);
  return base + cycles * kTwoPi;
}

}  // namespace circlemap
