#pragma once

#include "entroseg/types.hpp"

#include <cstdint>

namespace entroseg {

// Validates and builds a Signal.
// Throws LengthMismatchError, NonMonotonicAbscissaError, NonFiniteValueError.
Signal make_signal(std::vector<double> x, std::vector<double> y);

// Convenience: y against its sample index 0..n-1.
Signal make_index_signal(std::vector<double> y);

// The canonical three-branch piecewise test function on [-4, 4]:
// -x on [-4,0], x on (0,2), 2+3x on [2,4]. Throws OutOfDomainError.
double eval_piecewise_test_signal(double x);

// The 41-point sampling of the test function, step 0.2 with the boundary
// x=0 on the first branch and x=2 on the third.
Signal make_piecewise_test_signal();

// y' = y + eps with eps iid N(0, std^2); x unchanged; deterministic per seed.
Signal add_gaussian_noise(const Signal& s, double std, std::uint64_t seed);

} // namespace entroseg
