#pragma once
#include "circlemap/series.hpp"

namespace circlemap {

// Fourier-multiplier form of the conjugate: c~_k = -i sgn(k) c_k, c~_0 = 0.
FourierSeries conjugate_spectral(const FourierSeries& s);

// The mean-zero conjugation operator K on grid samples: analyze, apply the
// multiplier, synthesize on the same grid. Exact for band-limited input.
GridFunction conjugate_spectral_grid(const GridFunction& g);

// Real-vector convenience form of K (used in solver hot loops).
std::vector<double> conjugate_grid_values(const std::vector<double>& g);

// Truncated principal-value integral with the cotangent-type kernel,
// symmetric-node pairing, cutoff eps (>= grid spacing). Cross-check of the
// multiplier form.
GridFunction conjugate_quadrature(const GridFunction& g, double eps);

// Fejer (Cesaro) weights: c_k * (1 - |k|/N) for |k| <= min(N, M), zero beyond.
FourierSeries fejer_sum(const FourierSeries& s, int N);

// Truncation to |k| <= N.
FourierSeries partial_sum(const FourierSeries& s, int N);

}  // namespace circlemap
