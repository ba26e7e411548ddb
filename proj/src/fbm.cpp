#include "entroseg/fbm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>

#include <fftw3.h>

namespace entroseg {

namespace {

void validate_spec(double hurst, std::size_t n, double variance_scale) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw OutOfDomainError("hurst must lie in (0, 1)");
    if (n < 1)
        throw OutOfDomainError("need at least one increment");
    if (!(variance_scale > 0.0) || !std::isfinite(variance_scale))
        throw OutOfDomainError("variance_scale must be positive");
}

// autocovariance of unit-step fGn at lag k
double fgn_gamma(double hurst, double v, std::size_t k) {
    const double h2 = 2.0 * hurst;
    const double kd = static_cast<double>(k);
    const double prev = k == 0 ? 1.0 : std::pow(kd - 1.0, h2);
    return 0.5 * v * (std::pow(kd + 1.0, h2) - 2.0 * std::pow(kd, h2) + prev);
}

std::vector<double> cholesky_fgn(double hurst, std::size_t n, Rng& rng, double v) {
    if (n > 1024)
        throw SynthesisFailureError("circulant embedding failed and n is too large for a dense factor");
    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k)
        gamma[k] = fgn_gamma(hurst, v, k);

    // row-major lower triangle
    std::vector<double> L(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = gamma[i - j];
            for (std::size_t k = 0; k < j; ++k)
                s -= L[i * n + k] * L[j * n + k];
            if (i == j) {
                if (s <= 0.0)
                    throw SynthesisFailureError("covariance is not positive definite");
                L[i * n + i] = std::sqrt(s);
            } else {
                L[i * n + j] = s / L[j * n + j];
            }
        }
    }
    std::vector<double> z(n);
    for (double& zi : z)
        zi = rng.gauss();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j <= i; ++j)
            s += L[i * n + j] * z[j];
        out[i] = s;
    }
    return out;
}

} // namespace

std::vector<double> gen_fgn(double hurst, std::size_t n, Rng& rng, double variance_scale) {
    validate_spec(hurst, n, variance_scale);
    const std::size_t N = n;
    if (N == 1)
        return {rng.gauss(0.0, std::sqrt(variance_scale))};

    // first row of the circulant extension of the covariance
    const std::size_t M = 2 * N;
    std::vector<double> g(N + 1);
    for (std::size_t k = 0; k <= N; ++k)
        g[k] = fgn_gamma(hurst, variance_scale, k);
    std::vector<double> c(M);
    for (std::size_t k = 0; k <= N; ++k)
        c[k] = g[k];
    for (std::size_t k = 1; k < N; ++k)
        c[N + k] = g[N - k];

    std::vector<double> lam(N + 1);
    {
        double* in = fftw_alloc_real(M);
        fftw_complex* out = fftw_alloc_complex(N + 1);
        fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(M), in, out, FFTW_ESTIMATE);
        std::copy(c.begin(), c.end(), in);
        fftw_execute(plan);
        for (std::size_t k = 0; k <= N; ++k)
            lam[k] = out[k][0];
        fftw_destroy_plan(plan);
        fftw_free(in);
        fftw_free(out);
    }

    const double lam_max = *std::max_element(lam.begin(), lam.end());
    const double lam_min = *std::min_element(lam.begin(), lam.end());
    if (lam_min < -1e-9 * lam_max)
        return cholesky_fgn(hurst, N, rng, variance_scale);
    for (double& l : lam)
        l = std::max(l, 0.0);

    const double Md = static_cast<double>(M);
    std::vector<std::complex<double>> W(N + 1);
    const double z0 = rng.gauss();
    const double zN = rng.gauss();
    std::vector<double> zr(N - 1), zi(N - 1);
    for (double& z : zr)
        z = rng.gauss();
    for (double& z : zi)
        z = rng.gauss();
    W[0] = std::sqrt(lam[0] * Md) * z0;
    W[N] = std::sqrt(lam[N] * Md) * zN;
    for (std::size_t k = 1; k < N; ++k)
        W[k] = std::sqrt(lam[k] * Md / 2.0) * std::complex<double>(zr[k - 1], zi[k - 1]);

    std::vector<double> e(M);
    {
        fftw_complex* in = fftw_alloc_complex(N + 1);
        double* out = fftw_alloc_real(M);
        fftw_plan plan = fftw_plan_dft_c2r_1d(static_cast<int>(M), in, out, FFTW_ESTIMATE);
        for (std::size_t k = 0; k <= N; ++k) {
            in[k][0] = W[k].real();
            in[k][1] = W[k].imag();
        }
        fftw_execute(plan);
        for (std::size_t k = 0; k < M; ++k)
            e[k] = out[k] / Md; // the c2r transform is unnormalized
        fftw_destroy_plan(plan);
        fftw_free(in);
        fftw_free(out);
    }
    e.resize(N);
    return e;
}

std::vector<double> gen_fbm(const FbmSpec& spec, Rng& rng) {
    if (spec.n < 2)
        throw OutOfDomainError("path needs at least 2 samples");
    std::vector<double> inc = gen_fgn(spec.hurst, spec.n - 1, rng, spec.variance_scale);
    if (spec.normalization == Normalization::UnitInterval) {
        const double scale = std::pow(1.0 / static_cast<double>(spec.n), spec.hurst);
        for (double& v : inc)
            v *= scale;
    }
    std::vector<double> path(spec.n);
    path[0] = 0.0;
    for (std::size_t i = 0; i < inc.size(); ++i)
        path[i + 1] = path[i] + inc[i];
    return path;
}

std::vector<double> gen_fbm(const FbmSpec& spec) {
    Rng rng(spec.seed);
    return gen_fbm(spec, rng);
}

std::vector<double> gen_piecewise_fbm(const std::vector<HurstBlock>& schedule, Rng& rng) {
    if (schedule.empty())
        throw EmptyInputError("schedule is empty");
    std::vector<double> out;
    double last = 0.0;
    for (const HurstBlock& blk : schedule) {
        FbmSpec spec;
        spec.hurst = blk.hurst;
        spec.n = blk.n;
        spec.normalization = Normalization::UnitInterval;
        const std::vector<double> p = gen_fbm(spec, rng);
        for (double v : p)
            out.push_back(v + last);
        last = out.back();
    }
    return out;
}

std::vector<double> gen_piecewise_fbm(const std::vector<HurstBlock>& schedule, std::uint64_t seed) {
    Rng rng(seed);
    return gen_piecewise_fbm(schedule, rng);
}

FractalScan box_counting_dimension(const std::vector<double>& y, std::vector<std::size_t> scales) {
    const std::size_t n = y.size();
    if (n < 2)
        throw TooFewPointsError("box counting needs at least 2 samples");
    for (double v : y)
        if (!std::isfinite(v))
            throw NonFiniteValueError("box counting: non-finite sample");

    const double lo = *std::min_element(y.begin(), y.end());
    const double hi = *std::max_element(y.begin(), y.end());
    const double range = hi - lo;
    if (range <= 0.0)
        throw DegenerateSignalError("flat signal has no graph dimension");

    if (scales.empty()) {
        const std::size_t top = std::max<std::size_t>(4, n / 8);
        for (std::size_t r = 4; r <= top; r *= 2)
            scales.push_back(r);
    } else {
        std::sort(scales.begin(), scales.end());
        for (std::size_t r : scales)
            if (r < 1 || r >= n)
                throw OutOfDomainError("box scale outside [1, n)");
    }
    if (scales.size() < 2)
        throw TooFewPointsError("too few box scales for a log-log fit");

    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = (y[i] - lo) / range;

    FractalScan scan;
    scan.scales = scales;
    std::vector<double> lx, ly;
    for (std::size_t r : scales) {
        const double s = static_cast<double>(r) / static_cast<double>(n - 1);
        long long tot = 0, ncol = 0;
        for (std::size_t c0 = 0; c0 < n - 1; c0 += r) {
            const std::size_t c1 = std::min(c0 + r, n - 1);
            double wlo = u[c0], whi = u[c0];
            for (std::size_t i = c0 + 1; i <= c1; ++i) {
                wlo = std::min(wlo, u[i]);
                whi = std::max(whi, u[i]);
            }
            tot += static_cast<long long>(std::floor(whi / s)) -
                   static_cast<long long>(std::floor(wlo / s)) + 1;
            ++ncol;
        }
        const double count = static_cast<double>(std::max<long long>(tot - ncol, 1));
        scan.counts.push_back(count);
        lx.push_back(std::log(s));
        ly.push_back(std::log(count));
    }
    scan.log_fit = ols_line(lx, ly);
    scan.dimension = std::clamp(-scan.log_fit.a, 1.0, 2.0);
    scan.hurst_est = 2.0 - scan.dimension;
    return scan;
}

double variance_scaling_hurst(const std::vector<double>& y, const std::vector<std::size_t>& lags) {
    const std::size_t n = y.size();
    if (lags.empty())
        throw EmptyInputError("no lags given");
    if (lags.size() < 2)
        throw TooFewPointsError("too few lags for a log-log fit");
    std::vector<double> lx, lv;
    for (std::size_t L : lags) {
        if (L < 1 || L >= n)
            throw OutOfDomainError("lag outside [1, n)");
        double s = 0.0;
        for (std::size_t i = L; i < n; ++i) {
            const double d = y[i] - y[i - L];
            s += d * d;
        }
        const double v = s / static_cast<double>(n - L);
        if (v > 0.0) {
            lx.push_back(std::log(static_cast<double>(L)));
            lv.push_back(std::log(v));
        }
    }
    if (lx.size() < 2)
        throw DegenerateSignalError("variance of differences vanishes at every lag");
    const LineFit f = ols_line(lx, lv);
    return std::clamp(f.a / 2.0, 0.0, 1.0);
}

} // namespace entroseg
