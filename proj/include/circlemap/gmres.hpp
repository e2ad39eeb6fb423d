#pragma once
#include <functional>
#include <vector>

namespace circlemap {

struct GmresResult {
  bool converged = false;
  int matvecs = 0;
  double rel_residual = 0.0;
};

// Restarted GMRES(m) with modified Gram-Schmidt and Givens rotations.
// Solves A x = b for the matrix-free operator y = A(x). x holds the initial
// guess on entry and the solution on exit. Stops when the preconditioned
// residual norm drops below rtol * |b|.
GmresResult gmres(const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
                  const std::vector<double>& b, std::vector<double>& x,
                  int restart, int max_cycles, double rtol);

}  // namespace circlemap
