#pragma once
#include <complex>
#include <vector>

namespace circlemap {

// Low-level numeric kernels. Each comes as a serial reference and an
// OpenMP-parallel variant with identical output (parallelism is over output
// elements only; every element is accumulated in a fixed serial order, so
// results are byte-identical for any thread count).

// Truncated principal-value conjugate on the uniform grid, symmetric pairing:
//   out_j = (dt / 2*pi) * sum_{m=m0..n/2} (g_{j-m} - g_{j+m}) / tan(m*dt/2)
// with dt = 2*pi/n. Pairing the nodes at distance +-m*dt around t_j exploits
// the oddness of the kernel; the m = n/2 term vanishes identically (same node,
// kernel zero at the antipode). m0 >= 1 is the cutoff index, eps = m0 * dt.
void pv_conjugate_serial(const double* g, double* out, int n, int m0);
void pv_conjugate_omp(const double* g, double* out, int n, int m0);

// Naive O(n^2) forward DFT, X_k = sum_j x_j e^{-2*pi*i*jk/n}; reference for
// the radix-2 FFT.
void dft_forward_serial(const std::complex<double>* in, std::complex<double>* out, int n);
void dft_forward_omp(const std::complex<double>* in, std::complex<double>* out, int n);

// max_j |g[(j+m) mod n] - g[j]|, the grid modulus-of-continuity building block.
double increment_sup_serial(const double* g, int n, int m);
double increment_sup_omp(const double* g, int n, int m);

}  // namespace circlemap
