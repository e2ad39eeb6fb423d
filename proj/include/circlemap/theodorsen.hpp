#pragma once
#include <complex>
#include <utility>
#include <vector>

#include "circlemap/catalog.hpp"
#include "circlemap/series.hpp"

namespace circlemap {

struct SolverParams {
  int n = 2048;
  double damping = 0.5;
  double tol = 1e-10;
  int max_iter = 20000;
  int continuation_steps = 4;

  void validate() const;
};

struct SolveOutcome {
  CircleHomeomorphism h;     // always a valid homeomorphism (repaired if needed)
  double residual = 0.0;     // sup-norm residual of the returned h
  int iterations = 0;        // damped fixed-point iterations performed
  bool converged = false;    // residual <= tol
  double constant_c = 0.0;   // additive constant: -mean(h - id)

  // Diagnostics. raw_* describe the last unrepaired iterate: when the grid is
  // too coarse for the boundary correspondence, the discrete equation can be
  // solved to raw_residual by a non-monotone iterate while every monotone
  // repair of it has a much larger residual.
  bool raw_monotone = true;
  double raw_residual = 0.0;
  double raw_min_slope = 0.0;
  int newton_steps = 0;      // accelerator steps taken (0 = pure fixed point)
};

// Sampled star-like curve gamma(t_j) = exp(f(t_j)) * exp(i t_j).
std::vector<std::complex<double>> build_curve(const FunctionSpec& f, int n);

// Damped fixed-point solve of h(t) - t = K[f o h](t) with continuation in the
// amplitude lambda (f_lambda = lambda f) and monotone repair of iterates; a
// Newton accelerator (matrix-free GMRES on the linearized equation) takes over
// when the fixed-point phase stalls above tol.
SolveOutcome solve_boundary_correspondence(const FunctionSpec& f, const SolverParams& params);

// Exact boundary-correspondence pair for G(z) = z + beta z^2 (|beta| <= 0.3):
// h_exact(t) = t + atan2(beta sin t, 1 + beta cos t) and f the log-radius
// profile of the image curve. The pair satisfies the fixed-point equation to
// machine precision.
std::pair<FunctionSpec, CircleHomeomorphism> synthesize_ground_truth(double beta, int n);

// sup_j |(h(t_j) - t_j - m) - K[f o h](t_j)|, m = mean(h - id).
double residual(const FunctionSpec& f, const CircleHomeomorphism& h);

}  // namespace circlemap
