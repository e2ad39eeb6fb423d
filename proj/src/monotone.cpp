#include "circlemap/monotone.hpp"

#include <cmath>

#include "circlemap/common.hpp"

namespace circlemap {

void pava_nondecreasing(std::vector<double>& y) {
  const int n = static_cast<int>(y.size());
  if (n <= 1) return;
  // Block stacks: value (weighted mean), weight, and sample count per block.
  std::vector<double> val(n), wt(n);
  std::vector<int> cnt(n);
  int top = 0;
  for (int i = 0; i < n; ++i) {
    val[top] = y[i];
    wt[top] = 1.0;
    cnt[top] = 1;
    while (top > 0 && val[top - 1] > val[top]) {
      const double w = wt[top - 1] + wt[top];
      val[top - 1] = (val[top - 1] * wt[top - 1] + val[top] * wt[top]) / w;
      wt[top - 1] = w;
      cnt[top - 1] += cnt[top];
      --top;
    }
    ++top;
  }
  int i = 0;
  for (int b = 0; b < top; ++b) {
    for (int r = 0; r < cnt[b]; ++r) y[i++] = val[b];
  }
}

void strictify(std::vector<double>& y, double step) {
  for (size_t i = 1; i < y.size(); ++i) {
    if (y[i] <= y[i - 1]) y[i] = y[i - 1] + step;
  }
}

CircleHomeomorphism repair_to_homeomorphism(const std::vector<double>& u) {
  const int n = static_cast<int>(u.size());
  std::vector<double> lift(n);
  for (int j = 0; j < n; ++j) lift[j] = kTwoPi * j / n + u[j];
  pava_nondecreasing(lift);
  strictify(lift, 1e-12);
  // Wrap constraint: lift[n-1] must stay strictly below lift[0] + 2*pi.
  const double top = lift[0] + kTwoPi;
  if (lift[n - 1] >= top) {
    for (int j = n - 1; j >= 1; --j) {
      const double cap = top - (n - j) * 1e-12;
      if (lift[j] > cap) lift[j] = cap;
    }
    strictify(lift, 1e-12);
  }
  std::vector<double> ur(n);
  for (int j = 0; j < n; ++j) ur[j] = lift[j] - kTwoPi * j / n;
  return CircleHomeomorphism::from_u(ur);
}

bool is_homeomorphic_u(const std::vector<double>& u) {
  const int n = static_cast<int>(u.size());
  for (int j = 0; j + 1 < n; ++j) {
    if (!(kTwoPi * (j + 1) / n + u[j + 1] > kTwoPi * j / n + u[j])) return false;
  }
  return kTwoPi + u[0] > kTwoPi * (n - 1) / n + u[n - 1];
}

int winding_number(const std::vector<std::complex<double>>& pts) {
  const size_t n = pts.size();
  if (n < 3) throw InvalidInput("winding_number: need at least 3 points");
  double total = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const std::complex<double> a = pts[j];
    const std::complex<double> b = pts[(j + 1) % n];
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0) {
      throw InvalidInput("winding_number: curve passes through 0");
    }
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace circlemap
