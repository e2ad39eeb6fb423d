#include "circlemap/gmres.hpp"

#include <cmath>

namespace circlemap {

namespace {

double nrm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

GmresResult gmres(const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
                  const std::vector<double>& b, std::vector<double>& x,
                  int restart, int max_cycles, double rtol) {
  GmresResult res;
  const size_t n = b.size();
  const double bnorm = nrm2(b);
  if (bnorm == 0.0) {
    x.assign(n, 0.0);
    res.converged = true;
    return res;
  }
  const int m = restart;
  std::vector<std::vector<double>> V(m + 1, std::vector<double>(n));
  // Hessenberg column storage H[j] has j+2 entries before rotations.
  std::vector<std::vector<double>> H(m, std::vector<double>(m + 1, 0.0));
  std::vector<double> cs(m), sn(m), gvec(m + 1);
  std::vector<double> w(n), tmp(n);

  for (int cycle = 0; cycle < max_cycles; ++cycle) {
    apply(x, tmp);
    ++res.matvecs;
    for (size_t i = 0; i < n; ++i) tmp[i] = b[i] - tmp[i];
    double beta = nrm2(tmp);
    res.rel_residual = beta / bnorm;
    if (beta <= rtol * bnorm) {
      res.converged = true;
      return res;
    }
    for (size_t i = 0; i < n; ++i) V[0][i] = tmp[i] / beta;
    std::fill(gvec.begin(), gvec.end(), 0.0);
    gvec[0] = beta;

    int j = 0;
    for (; j < m; ++j) {
      apply(V[j], w);
      ++res.matvecs;
      // Modified Gram-Schmidt.
      for (int i = 0; i <= j; ++i) {
        const double hij = dot(w, V[i]);
        H[j][i] = hij;
        for (size_t q = 0; q < n; ++q) w[q] -= hij * V[i][q];
      }
      const double hnext = nrm2(w);
      H[j][j + 1] = hnext;
      if (hnext > 0.0) {
        for (size_t q = 0; q < n; ++q) V[j + 1][q] = w[q] / hnext;
      }
      // Apply previous Givens rotations to the new column.
      for (int i = 0; i < j; ++i) {
        const double t = cs[i] * H[j][i] + sn[i] * H[j][i + 1];
        H[j][i + 1] = -sn[i] * H[j][i] + cs[i] * H[j][i + 1];
        H[j][i] = t;
      }
      // New rotation annihilating H[j][j+1].
      const double denom = std::hypot(H[j][j], H[j][j + 1]);
      if (denom == 0.0) {
        cs[j] = 1.0;
        sn[j] = 0.0;
      } else {
        cs[j] = H[j][j] / denom;
        sn[j] = H[j][j + 1] / denom;
      }
      H[j][j] = denom;
      H[j][j + 1] = 0.0;
      gvec[j + 1] = -sn[j] * gvec[j];
      gvec[j] = cs[j] * gvec[j];
      res.rel_residual = std::abs(gvec[j + 1]) / bnorm;
      if (res.rel_residual <= rtol || hnext == 0.0) {
        ++j;
        break;
      }
    }
    // Back substitution for the j x j triangular system.
    std::vector<double> y(j, 0.0);
    for (int i = j - 1; i >= 0; --i) {
      double s = gvec[i];
      for (int q = i + 1; q < j; ++q) s -= H[q][i] * y[q];
      y[i] = s / H[i][i];
    }
    for (int i = 0; i < j; ++i) {
      for (size_t q = 0; q < n; ++q) x[q] += y[i] * V[i][q];
    }
    if (res.rel_residual <= rtol) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

}  // namespace circlemap
