#pragma once
#include <complex>
#include <vector>

#include "circlemap/series.hpp"

namespace circlemap {

// In-place pool-adjacent-violators: least-squares projection onto
// nondecreasing sequences (uniform weights).
void pava_nondecreasing(std::vector<double>& y);

// Minimal forward pass making a nondecreasing sequence strictly increasing:
// y[i] = max(y[i], y[i-1] + step). step defaults to 1e-12 per node.
void strictify(std::vector<double>& y, double step = 1e-12);

// Projects u = h - id onto the set of valid homeomorphism lifts:
// PAVA on the lift t_j + u_j, then strictification. The wrap constraint
// lift[n] = lift[0] + 2*pi is enforced exactly.
CircleHomeomorphism repair_to_homeomorphism(const std::vector<double>& u);

// True when t_j + u_j extends to a strictly increasing periodic lift.
bool is_homeomorphic_u(const std::vector<double>& u);

// Discrete winding number of a sampled closed curve around 0.
int winding_number(const std::vector<std::complex<double>>& pts);

}  // namespace circlemap
