#include "entroseg/entropy.hpp"
#include "entroseg/fitting.hpp"
#include "entroseg/rng.hpp"
#include "entroseg/signal.hpp"

#include <cmath>

namespace entroseg {

EntropyCurve entropy_transform(const Signal& s) {
    const std::size_t n = s.size();
    if (s.x.size() != s.y.size())
        throw LengthMismatchError("x and y lengths differ");
    if (n < 2)
        throw TooFewPointsError("entropy needs at least 2 samples");
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
            throw NonFiniteValueError("non-finite sample");
    EntropyCurve out;
    out.x = s.x;
    out.h.resize(n);
    out.h[0] = 0.0;
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = std::abs(s.y[i] - s.y[i - 1]);
        out.h[i] = out.h[i - 1] + d;
        sum += d;
        sum2 += d * d;
    }
    const double m = static_cast<double>(n - 1);
    out.stats.mean_abs_diff = sum / m;
    const double var = sum2 / m - out.stats.mean_abs_diff * out.stats.mean_abs_diff;
    out.stats.std_abs_diff = var > 0.0 ? std::sqrt(var) : 0.0;
    return out;
}

LinearMeanReport entropy_linear_mean_check(double std, std::size_t n,
                                           std::size_t trials,
                                           std::uint64_t seed) {
    LinearMeanReport rep;
    rep.trials = trials;
    double acc = 0.0, worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, t);
        std::vector<double> y(n);
        for (auto& v : y)
            v = rng.gauss(0.0, std);
        const EntropyCurve ec = entropy_transform(make_index_signal(std::move(y)));
        double gap = 0.0;
        if (ec.stats.mean_abs_diff > 0.0) {
            std::vector<double> idx(n);
            for (std::size_t i = 0; i < n; ++i)
                idx[i] = static_cast<double>(i);
            const LineFit f = ols_line(idx, ec.h);
            gap = std::abs(f.a - ec.stats.mean_abs_diff) / ec.stats.mean_abs_diff;
        }
        acc += gap;
        worst = std::max(worst, gap);
    }
    rep.mean_rel_gap = trials ? acc / static_cast<double>(trials) : 0.0;
    rep.max_rel_gap = worst;
    return rep;
}

} // namespace entroseg
