#include "circlemap/theodorsen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "circlemap/conjugation.hpp"
#include "circlemap/gmres.hpp"
#include "circlemap/monotone.hpp"

namespace circlemap {

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

// sup_j |u_j - mean(u) - Ku_j|
double sup_residual(const std::vector<double>& u, const std::vector<double>& Ku) {
  const double m = mean_of(u);
  double r = 0.0;
  for (size_t j = 0; j < u.size(); ++j) r = std::max(r, std::abs(u[j] - m - Ku[j]));
  return r;
}

}  // namespace

void SolverParams::validate() const {
  if (!is_power_of_two(n) || n < 16) throw InvalidInput("SolverParams: n must be a power of two >= 16");
  if (!(damping > 0.0 && damping <= 1.0)) throw InvalidInput("SolverParams: damping must be in (0, 1]");
  if (!(tol > 0.0 && tol < 1.0)) throw InvalidInput("SolverParams: tol must be in (0, 1)");
  if (max_iter < 1) throw InvalidInput("SolverParams: max_iter must be >= 1");
  if (continuation_steps < 1 || continuation_steps > 64)
    throw InvalidInput("SolverParams: continuation_steps must be in [1, 64]");
}

std::vector<std::complex<double>> build_curve(const FunctionSpec& f, int n) {
  f.validate();
  if (!is_power_of_two(n) || n < 4) throw InvalidInput("build_curve: n must be a power of two >= 4");
  const std::vector<double> t = grid_nodes(n);
  const std::vector<double> fv = evaluate(f, t);
  std::vector<std::complex<double>> pts(n);
  for (int j = 0; j < n; ++j) pts[j] = std::exp(std::complex<double>(fv[j], t[j]));
  return pts;
}

double residual(const FunctionSpec& f, const CircleHomeomorphism& h) {
  h.validate();
  f.validate();
  const std::vector<double> pts(h.lift.begin(), h.lift.begin() + h.n);
  const std::vector<double> g = evaluate(f, pts);
  const std::vector<double> Kg = conjugate_grid_values(g);
  return sup_residual(h.u(), Kg);
}

SolveOutcome solve_boundary_correspondence(const FunctionSpec& f, const SolverParams& params) {
  params.validate();
  f.validate();
  const int n = params.n;
  const double d = params.damping;
  const std::vector<double> t = grid_nodes(n);

  std::vector<double> u(n, 0.0);
  int picard_total = 0;
  int newton_total = 0;

  // Residual of u at the given amplitude; Ku receives K[f_lam o (id + u)].
  auto eval_state = [&](const FunctionSpec& fs, const std::vector<double>& uu,
                        std::vector<double>& Ku) -> double {
    std::vector<double> pts(n);
    for (int j = 0; j < n; ++j) pts[j] = t[j] + uu[j];
    const std::vector<double> g = evaluate(fs, pts);
    Ku = conjugate_grid_values(g);
    return sup_residual(uu, Ku);
  };

  enum class Attempt { Success, Stuck, Budget };

  // One inner solve at fixed amplitude lam: damped fixed-point iteration with
  // monotone repair; if that stalls or diverges, a Newton accelerator solving
  // (I - K M_w) delta = -(u - K[f o (id+u)]) by matrix-free GMRES, with an
  // any-decrease line search. The Newton phase iterates on the raw (possibly
  // non-monotone) grid values: at coarse n the discrete equation's root need
  // not be monotone, and projecting mid-Newton prevents convergence; the
  // returned h is repaired once at the end of the solve.
  auto attempt = [&](double lam, double inner_tol) -> Attempt {
    const FunctionSpec fs = f.scaled(lam);
    std::vector<double> Ku;
    double res = eval_state(fs, u, Ku);
    std::vector<double> u_best = u;
    double res_best = res;
    std::deque<double> hist{res};
    const int window = 40;

    bool stalled = false;
    int local_iters = 0;
    while (res > inner_tol) {
      if (picard_total >= params.max_iter) {
        u = u_best;
        return Attempt::Budget;
      }
      if (local_iters >= 4000) {
        stalled = true;
        break;
      }
      for (int j = 0; j < n; ++j) u[j] = (1.0 - d) * u[j] + d * Ku[j];
      if (!is_homeomorphic_u(u)) u = repair_to_homeomorphism(u).u();
      ++picard_total;
      ++local_iters;
      res = eval_state(fs, u, Ku);
      if (!std::isfinite(res)) {
        stalled = true;
        break;
      }
      if (res < res_best) {
        res_best = res;
        u_best = u;
      }
      hist.push_back(res);
      if (static_cast<int>(hist.size()) > window + 1) hist.pop_front();
      if (res > 10.0 * res_best ||
          (static_cast<int>(hist.size()) == window + 1 && res > 0.97 * hist.front())) {
        stalled = true;
        break;
      }
    }
    if (!stalled && res <= inner_tol) return Attempt::Success;

    u = u_best;
    res = eval_state(fs, u, Ku);
    const int restart = std::min(400, n);
    for (int step = 0; step < 25; ++step) {
      if (res <= inner_tol) return Attempt::Success;
      if (newton_total >= 150) return Attempt::Budget;
      std::vector<double> pts(n), b(n);
      for (int j = 0; j < n; ++j) pts[j] = t[j] + u[j];
      const std::vector<double> w = evaluate_deriv(fs, pts);
      for (int j = 0; j < n; ++j) b[j] = Ku[j] - u[j];
      auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        std::vector<double> wx(n);
        for (int j = 0; j < n; ++j) wx[j] = w[j] * x[j];
        const std::vector<double> Kwx = conjugate_grid_values(wx);
        y.resize(n);
        for (int j = 0; j < n; ++j) y[j] = x[j] - Kwx[j];
      };
      std::vector<double> delta(n, 0.0);
      gmres(apply, b, delta, restart, 20, 1e-12);
      bool accepted = false;
      double alpha = 1.0;
      for (int trial = 0; trial < 6; ++trial, alpha *= 0.5) {
        std::vector<double> ut(n), Kt;
        for (int j = 0; j < n; ++j) ut[j] = u[j] + alpha * delta[j];
        const double rt = eval_state(fs, ut, Kt);
        if (std::isfinite(rt) && rt < res) {
          u = std::move(ut);
          Ku = std::move(Kt);
          res = rt;
          ++newton_total;
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      if (res < res_best) {
        res_best = res;
        u_best = u;
      }
    }
    if (res <= inner_tol) return Attempt::Success;
    if (res > res_best) u = u_best;
    return Attempt::Stuck;
  };

  // Amplitude continuation with adaptive bisection: on failure at lam the gap
  // from the last solved amplitude is halved; when the gap cannot shrink any
  // further, one last full-amplitude attempt is made so the outcome always
  // describes the requested f.
  std::deque<double> pending;
  for (int s = 1; s <= params.continuation_steps; ++s)
    pending.push_back(double(s) / params.continuation_steps);
  double lambda_done = 0.0;
  bool final_forced = false;
  int attempts = 0;
  while (!pending.empty()) {
    const double lam = pending.front();
    const double inner_tol = lam == 1.0 ? params.tol : std::max(params.tol, 1e-6);
    ++attempts;
    const Attempt a = attempt(lam, inner_tol);
    if (a == Attempt::Success) {
      lambda_done = lam;
      pending.pop_front();
      continue;
    }
    if (a == Attempt::Budget || attempts >= 64 || final_forced) break;
    if (lam - lambda_done > 1.0 / 32.0) {
      pending.push_front(0.5 * (lambda_done + lam));
      continue;
    }
    pending.clear();
    pending.push_back(1.0);
    final_forced = true;
  }

  SolveOutcome out;
  {
    std::vector<double> Ku;
    out.raw_residual = eval_state(f, u, Ku);
  }
  const double dt = kTwoPi / n;
  double min_slope = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const double du = (j + 1 < n ? u[j + 1] : u[0]) - u[j];
    min_slope = std::min(min_slope, 1.0 + du / dt);
  }
  out.raw_min_slope = min_slope;
  out.raw_monotone = min_slope > 0.0;

  out.h = repair_to_homeomorphism(u);
  out.residual = residual(f, out.h);
  out.converged = out.residual <= params.tol;
  out.iterations = picard_total;
  out.newton_steps = newton_total;
  out.constant_c = -mean_of(out.h.u());
  return out;
}

std::pair<FunctionSpec, CircleHomeomorphism> synthesize_ground_truth(double beta, int n) {
  if (!(std::abs(beta) <= 0.3)) throw InvalidInput("synthesize_ground_truth: need |beta| <= 0.3");
  if (!is_power_of_two(n) || n < 16)
    throw InvalidInput("synthesize_ground_truth: n must be a power of two >= 16");
  FunctionSpec f = FunctionSpec::make_log_radius_of_map(beta);
  // Star-likeness of the image of z + beta z^2: Re(z G'(z)/G(z)) > 0 on the
  // boundary, checked on a fine grid.
  {
    const int m = 4096;
    for (int j = 0; j < m; ++j) {
      const std::complex<double> z = std::polar(1.0, kTwoPi * j / m);
      const std::complex<double> g = z + beta * z * z;
      const std::complex<double> dg = 1.0 + 2.0 * beta * z;
      if (!((z * dg / g).real() > 0.0))
        throw InvalidInput("synthesize_ground_truth: image curve is not star-like");
    }
  }
  const std::vector<double> t = grid_nodes(n);
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j)
    u[j] = std::atan2(beta * std::sin(t[j]), 1.0 + beta * std::cos(t[j]));
  return {f, CircleHomeomorphism::from_u(u)};
}

}  // namespace circlemap
