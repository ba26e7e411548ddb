#pragma once

#include "entroseg/types.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace entroseg {

struct LineFit {
    double a = 0.0;  // slope
    double b = 0.0;  // intercept
    double r2 = 0.0; // squared Pearson correlation, clamped to [0,1]
    double mean_abs_error = 0.0;
};

struct ExpFit {
    double a = 0.0;
    double b = 0.0;
    double r2 = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    // linearized-covariance standard errors, reported informationally
    double se_a = 0.0;
    double se_b = 0.0;
};

// Ordinary least squares y ~ a*x + b.
// r2 conventions: exact affine data (including any 2 distinct points) -> 1;
// constant y over more than 2 points with varying x -> 0. A window with
// mean_abs_error == 0 is the caller's exact-fit escape for flat data.
// Throws TooFewPointsError, DegenerateAbscissaError.
LineFit ols_line(const double* x, const double* y, std::size_t n);
LineFit ols_line(const std::vector<double>& x, const std::vector<double>& y);

double r_squared(const double* x, const double* y, std::size_t n);
double r_squared(const std::vector<double>& x, const std::vector<double>& y);

// Damped Gauss-Newton (Levenberg-Marquardt) fit of y ~ a*exp(b*x).
// Accepted steps never increase the sum of squares. Init from log-linear
// regression when every y is positive, else (mean(y), 0).
// Stops on relative SSE improvement < 1e-10, gradient inf-norm < 1e-10,
// or 200 iterations (then converged=false, best-so-far returned).
// Throws DegenerateInputError (fewer than 3 points or all-zero y).
ExpFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y,
                       std::optional<std::pair<double, double>> init = std::nullopt);

} // namespace entroseg
