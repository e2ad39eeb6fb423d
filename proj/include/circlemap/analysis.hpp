#pragma once
#include <utility>
#include <vector>

#include "circlemap/catalog.hpp"
#include "circlemap/series.hpp"

namespace circlemap {

// Cyclic grid total variation sum_j |g(t_{j+1}) - g(t_j)| (wraparound
// included): a lower bound of the true variation, increasing under grid
// refinement for continuous BV functions. Real input only.
double total_variation(const GridFunction& g);

// omega(delta) = max |g(t_i) - g(t_j)| over grid pairs with cyclic distance
// <= delta. Each delta must be >= the grid spacing. Nondecreasing in delta.
std::vector<double> modulus_of_continuity(const GridFunction& g, const std::vector<double>& deltas);

// sup over dyadic delta = 2*pi*2^{-j} in [2*pi/n, 1/4] of
// omega_h(delta) * log(1/delta), computed on the homeomorphism lift.
double log_modulus_statistic(const CircleHomeomorphism& h);

// sum |c_k|^2 |k| over |k| <= M.
double sobolev_half(const FourierSeries& s);
// Cumulative partial sums over dyadic bands 2^m <= |k| < 2^{m+1}.
std::vector<double> sobolev_band_partials(const FourierSeries& s);

struct DecayProfile {
  std::vector<double> band_max;  // max |k| |c_k| per dyadic band
  double global_sup = 0.0;       // over 1 <= |k| <= M
};
DecayProfile decay_profile(const FourierSeries& s);

// Riemann-Stieltjes pairing (1/2*pi) sum_j g(s_j) (gt(t_{j+1}) - gt(t_j)) with
// cyclic wrap, midpoint evaluation s_j = t_j + dt/2 (by trigonometric
// interpolation of g). Compare against sobolev_half(analyze(g)).
double stieltjes_pairing(const GridFunction& g, const GridFunction& gt);

// Fejer mean of the conjugate of g = sum_{m=1..N} eps(m)/m sin(m t):
// computed_sup = grid sup-norm of sigma_N(g~) at resolution n,
// closed_form   = sum_{m=1..N} eps(m)/m (1 - m/N).
// The sup is attained at t = 0 because all cosine coefficients share a sign.
std::pair<double, double> fejer_conjugate_sup(const EpsilonRule& rule, int N, int n);

}  // namespace circlemap
