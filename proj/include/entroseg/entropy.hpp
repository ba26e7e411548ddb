#pragma once

#include "entroseg/types.hpp"

#include <cstdint>

namespace entroseg {

// Increment statistics of a signal: mean and standard deviation of the
// absolute first differences (population convention for the std).
struct DiffStats {
    double mean_abs_diff = 0.0;
    double std_abs_diff = 0.0;
};

// Cumulative absolute-difference transform of a Signal. h[0] = 0,
// h nondecreasing, h[n-1] = total variation of y. The local slope of h
// equals the local mean absolute increment, so statistically homogeneous
// zones map to straight pieces.
struct EntropyCurve {
    std::vector<double> x; // copied from the source signal
    std::vector<double> h;
    DiffStats stats;

    Signal as_signal() const { return Signal{x, h}; }
};

EntropyCurve entropy_transform(const Signal& s);

struct LinearMeanReport {
    double mean_rel_gap = 0.0;
    double max_rel_gap = 0.0;
    std::size_t trials = 0;
};

// Monte-Carlo check that the entropy of seeded Gaussian noise is linear in
// mean: relative gap between the fitted entropy slope and mean_abs_diff,
// aggregated over `trials` independent signals. Gap defined as 0 when the
// slope is exactly zero (constant signal).
LinearMeanReport entropy_linear_mean_check(double std, std::size_t n,
                                           std::size_t trials,
                                           std::uint64_t seed);

} // namespace entroseg
