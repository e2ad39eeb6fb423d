#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace circlemap {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

inline bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

// Thrown on malformed inputs (bad grid sizes, unknown kinds, inconsistent
// dimensions). Distinct from numerical non-convergence, which is reported
// through result flags, never exceptions.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace circlemap
