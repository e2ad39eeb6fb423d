#pragma once
#include <complex>
#include <vector>

namespace circlemap {

// In-place radix-2 complex FFT, size must be a power of two.
// Forward:  X_k = sum_j x_j e^{-2*pi*i*jk/n}   (unnormalized)
// Inverse:  x_j = sum_k X_k e^{+2*pi*i*jk/n}   (unnormalized; caller divides by n)
void fft_forward(std::vector<std::complex<double>>& a);
void fft_inverse(std::vector<std::complex<double>>& a);

}  // namespace circlemap
