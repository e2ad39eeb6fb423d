#include "circlemap/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "circlemap/common.hpp"

namespace circlemap {

namespace {

// Forward twiddle table for size n: tw[k] = e^{-2*pi*i*k/n}, k < n/2.
// Cached per size; each entry computed by std::polar directly so FFT rounding
// does not accumulate along a recurrence.
const std::vector<std::complex<double>>& twiddles(size_t n) {
  static std::map<size_t, std::vector<std::complex<double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> tw(n / 2);
  for (size_t k = 0; k < n / 2; ++k) {
    tw[k] = std::polar(1.0, -kTwoPi * double(k) / double(n));
  }
  return cache.emplace(n, std::move(tw)).first->second;
}

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (n < 2) return;
  if (!is_power_of_two(static_cast<long>(n))) {
    throw InvalidInput("fft: size must be a power of two");
  }
  const auto& tw = twiddles(n);

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t half = len / 2;
    const size_t stride = n / len;
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < half; ++k) {
        std::complex<double> w = tw[k * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + half] * w;
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& a) { fft_radix2(a, false); }
void fft_inverse(std::vector<std::complex<double>>& a) { fft_radix2(a, true); }

}  // namespace circlemap
