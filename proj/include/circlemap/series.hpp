#pragma once
#include <complex>
#include <vector>

#include "circlemap/common.hpp"

namespace circlemap {

// Samples of a 2*pi-periodic function on the uniform dyadic grid t_j = 2*pi*j/n.
// Stored as complex; real_flag marks purely real data (imaginary parts zero).
struct GridFunction {
  int n = 0;
  std::vector<std::complex<double>> values;
  bool real_flag = true;

  GridFunction() = default;
  GridFunction(int n_, std::vector<std::complex<double>> v, bool real);
  static GridFunction from_real(std::vector<double> v);
  static GridFunction zeros(int n);

  double real_at(int j) const { return values[j].real(); }
  std::vector<double> real_values() const;
  void validate() const;
};

// Grid nodes t_j = 2*pi*j/n.
std::vector<double> grid_nodes(int n);

// Truncated Fourier series c_k, |k| <= M. Storage index k + M.
// real_flag: c_{-k} = conj(c_k) within 1e-12 (checked by validate()).
struct FourierSeries {
  int max_freq = 0;
  std::vector<std::complex<double>> coeffs;  // size 2*max_freq + 1
  bool real_flag = true;

  FourierSeries() = default;
  explicit FourierSeries(int M, bool real = true);

  std::complex<double> c(int k) const { return coeffs[k + max_freq]; }
  std::complex<double>& c(int k) { return coeffs[k + max_freq]; }
  void validate() const;
};

// c_k = (1/n) sum_j g(t_j) e^{-i k t_j}, |k| <= M = n/2 - 1 (Nyquist bin dropped).
FourierSeries analyze(const GridFunction& g);

// Samples of sum_{|k|<=M} c_k e^{i k t} on the n-grid; requires n >= 2(M+1).
GridFunction synthesize(const FourierSeries& s, int n);

// Point evaluation of the trigonometric sum (exact, O(M) per point).
double synthesize_at(const FourierSeries& s, double t);

// Lift of an orientation-preserving circle homeomorphism: strictly increasing,
// lift[n] = lift[0] + 2*pi exactly by construction.
struct CircleHomeomorphism {
  int n = 0;
  std::vector<double> lift;  // n + 1 entries

  static CircleHomeomorphism identity(int n);
  // Build from u = h - id sampled on the grid; lift must come out strictly
  // increasing (callers repair first when unsure).
  static CircleHomeomorphism from_u(const std::vector<double>& u);

  std::vector<double> u() const;  // h(t_j) - t_j, size n
  bool strictly_increasing() const;
  // min over nodes of (lift[j+1]-lift[j]) / (2*pi/n)
  double min_relative_slope() const;
  void validate() const;
};

// Monotone piecewise-linear interpolation of the lift with the equivariance
// interp(t + 2*pi) = interp(t) + 2*pi.
double interpolate_homeomorphism(const CircleHomeomorphism& h, double t);

}  // namespace circlemap
