#include "entroseg/signal.hpp"
#include "entroseg/rng.hpp"

#include <cmath>
#include <utility>

namespace entroseg {

Signal make_signal(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size())
        throw LengthMismatchError("x and y lengths differ");
    if (x.size() < 2)
        throw TooFewPointsError("signal needs at least 2 samples");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw NonFiniteValueError("non-finite sample");
        if (i > 0 && !(x[i] > x[i - 1]))
            throw NonMonotonicAbscissaError("x must be strictly increasing");
    }
    return Signal{std::move(x), std::move(y)};
}

Signal make_index_signal(std::vector<double> y) {
    std::vector<double> x(y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = static_cast<double>(i);
    return make_signal(std::move(x), std::move(y));
}

double eval_piecewise_test_signal(double x) {
    if (x < -4.0 || x > 4.0)
        throw OutOfDomainError("x outside [-4, 4]");
    if (x <= 0.0)
        return -x;
    if (x < 2.0)
        return x;
    return 2.0 + 3.0 * x;
}

Signal make_piecewise_test_signal() {
    std::vector<double> x(41), y(41);
    for (int k = 0; k < 41; ++k) {
        x[k] = (k - 20) * 0.2;
        y[k] = eval_piecewise_test_signal(x[k]);
    }
    return make_signal(std::move(x), std::move(y));
}

Signal add_gaussian_noise(const Signal& s, double std, std::uint64_t seed) {
    if (!std::isfinite(std) || std < 0.0)
        throw NonFiniteValueError("noise std must be finite and nonnegative");
    Signal out = s;
    if (std == 0.0)
        return out;
    Rng rng(seed);
    for (auto& v : out.y)
        v += rng.gauss(0.0, std);
    return out;
}

} // namespace entroseg
