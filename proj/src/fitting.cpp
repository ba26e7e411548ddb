#include "entroseg/fitting.hpp"

#include <algorithm>
#include <cmath>

namespace entroseg {

namespace {

bool all_equal(const double* v, std::size_t n) {
    for (std::size_t i = 1; i < n; ++i)
        if (v[i] != v[0])
            return false;
    return true;
}

} // namespace

LineFit ols_line(const double* x, const double* y, std::size_t n) {
    if (n < 2)
        throw TooFewPointsError("ols_line needs at least 2 points");
    if (all_equal(x, n))
        throw DegenerateAbscissaError("all abscissae identical");

    LineFit f;
    if (all_equal(y, n)) {
        // exactly flat data: horizontal line, zero error; r2 by convention
        f.a = 0.0;
        f.b = y[0];
        f.r2 = n == 2 ? 1.0 : 0.0;
        f.mean_abs_error = 0.0;
        return f;
    }

    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - xm;
        const double dy = y[i] - ym;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }

    f.a = sxy / sxx;
    f.b = ym - f.a * xm;
    if (n == 2)
        f.r2 = 1.0;
    else if (syy == 0.0)
        f.r2 = 0.0;
    else
        f.r2 = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);

    double mae = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        mae += std::abs(y[i] - (f.a * x[i] + f.b));
    f.mean_abs_error = mae / static_cast<double>(n);
    return f;
}

LineFit ols_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw LengthMismatchError("ols_line: length mismatch");
    return ols_line(x.data(), y.data(), x.size());
}

double r_squared(const double* x, const double* y, std::size_t n) {
    if (n < 2)
        throw TooFewPointsError("r_squared needs at least 2 points");
    if (all_equal(x, n))
        throw DegenerateAbscissaError("all abscissae identical");
    if (all_equal(y, n))
        return n == 2 ? 1.0 : 0.0;
    return ols_line(x, y, n).r2;
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw LengthMismatchError("r_squared: length mismatch");
    return r_squared(x.data(), y.data(), x.size());
}

namespace {

double exp_sse(const std::vector<double>& x, const std::vector<double>& y,
               double a, double b) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - a * std::exp(b * x[i]);
        s += r * r;
    }
    return s;
}

} // namespace

ExpFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y,
                       std::optional<std::pair<double, double>> init) {
    const std::size_t n = x.size();
    if (n != y.size())
        throw LengthMismatchError("fit_exponential: length mismatch");
    if (n < 3)
        throw DegenerateInputError("fit_exponential needs at least 3 points");
    bool all_zero = true, all_pos = true;
    for (double v : y) {
        if (v != 0.0)
            all_zero = false;
        if (v <= 0.0)
            all_pos = false;
    }
    if (all_zero)
        throw DegenerateInputError("fit_exponential: y identically zero");

    ExpFit fit;
    if (init) {
        fit.a = init->first;
        fit.b = init->second;
    } else if (all_pos) {
        std::vector<double> ly(n);
        for (std::size_t i = 0; i < n; ++i)
            ly[i] = std::log(y[i]);
        const LineFit lf = ols_line(x, ly);
        fit.a = std::exp(lf.b);
        fit.b = lf.a;
    } else {
        double m = 0.0;
        for (double v : y)
            m += v;
        fit.a = m / static_cast<double>(n);
        fit.b = 0.0;
    }

    double lambda = 1e-3;
    double sse = exp_sse(x, y, fit.a, fit.b);
    std::size_t it = 0;
    for (; it < 200; ++it) {
        // J columns: d/da = e^{bx}, d/db = a x e^{bx}
        double g0 = 0.0, g1 = 0.0, j00 = 0.0, j01 = 0.0, j11 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = std::exp(fit.b * x[i]);
            const double r = y[i] - fit.a * e;
            const double ja = e;
            const double jb = fit.a * x[i] * e;
            g0 += ja * r;
            g1 += jb * r;
            j00 += ja * ja;
            j01 += ja * jb;
            j11 += jb * jb;
        }
        if (std::max(std::abs(g0), std::abs(g1)) < 1e-10) {
            fit.converged = true;
            break;
        }
        const double m00 = j00 * (1.0 + lambda);
        const double m11 = j11 * (1.0 + lambda);
        const double det = m00 * m11 - j01 * j01;
        if (det == 0.0 || !std::isfinite(det)) {
            lambda *= 10.0;
            continue;
        }
        const double da = (m11 * g0 - j01 * g1) / det;
        const double db = (m00 * g1 - j01 * g0) / det;
        const double a2 = fit.a + da;
        const double b2 = fit.b + db;
        const double sse2 = exp_sse(x, y, a2, b2);
        if (std::isfinite(sse2) && sse2 <= sse) {
            const double rel = (sse - sse2) / std::max(sse, 1e-300);
            fit.a = a2;
            fit.b = b2;
            sse = sse2;
            lambda = std::max(lambda / 10.0, 1e-12);
            if (rel < 1e-10) {
                fit.converged = true;
                break;
            }
        } else {
            lambda *= 10.0;
        }
    }
    fit.iterations = it;

    double ym = 0.0;
    for (double v : y)
        ym += v;
    ym /= static_cast<double>(n);
    double sstot = 0.0;
    for (double v : y)
        sstot += (v - ym) * (v - ym);
    fit.r2 = sstot > 0.0 ? std::clamp(1.0 - sse / sstot, 0.0, 1.0) : 1.0;

    // linearized covariance at the solution, informational only
    if (n > 2) {
        double j00 = 0.0, j01 = 0.0, j11 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = std::exp(fit.b * x[i]);
            const double ja = e;
            const double jb = fit.a * x[i] * e;
            j00 += ja * ja;
            j01 += ja * jb;
            j11 += jb * jb;
        }
        const double det = j00 * j11 - j01 * j01;
        if (det > 0.0) {
            const double s2 = sse / static_cast<double>(n - 2);
            fit.se_a = std::sqrt(std::max(s2 * j11 / det, 0.0));
            fit.se_b = std::sqrt(std::max(s2 * j00 / det, 0.0));
        }
    }
    return fit;
}

} // namespace entroseg
