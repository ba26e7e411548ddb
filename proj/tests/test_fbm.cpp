#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "entroseg/fbm.hpp"
#include "entroseg/rng.hpp"

using namespace entroseg;

namespace {

std::vector<double> increments(const std::vector<double>& path) {
    std::vector<double> d(path.size() - 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        d[i] = path[i + 1] - path[i];
    return d;
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

TEST_CASE("paths are deterministic in the seed and start at zero") {
    FbmSpec spec;
    spec.hurst = 0.7;
    spec.n = 512;
    spec.seed = 42;
    const std::vector<double> a = gen_fbm(spec);
    const std::vector<double> b = gen_fbm(spec);
    REQUIRE(a.size() == 512);
    CHECK(a == b);
    CHECK(a[0] == 0.0);

    spec.seed = 43;
    CHECK(gen_fbm(spec) != a);
}

TEST_CASE("H=1/2 increments behave like white noise") {
    FbmSpec spec;
    spec.hurst = 0.5;
    spec.n = 4096;
    std::vector<double> pooled;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        spec.seed = seed;
        const std::vector<double> d = increments(gen_fbm(spec));
        pooled.insert(pooled.end(), d.begin(), d.end());
    }
    const double m = mean_of(pooled);
    double var = 0.0, lag1 = 0.0;
    for (double x : pooled)
        var += (x - m) * (x - m);
    var /= static_cast<double>(pooled.size());
    for (std::size_t i = 0; i + 1 < pooled.size(); ++i)
        lag1 += (pooled[i] - m) * (pooled[i + 1] - m);
    lag1 /= (static_cast<double>(pooled.size() - 1) * var);
    CHECK(std::abs(m) < 0.02);
    CHECK(var == doctest::Approx(1.0).epsilon(0.1));
    CHECK(std::abs(lag1) < 0.05);
}

TEST_CASE("H=0.8 increments carry the theoretical lag-1 correlation") {
    // rho(1) = 2^(2H-1) - 1 = 0.51572 at H = 0.8
    FbmSpec spec;
    spec.hurst = 0.8;
    spec.n = 8192;
    std::vector<double> rhos;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        spec.seed = seed;
        const std::vector<double> d = increments(gen_fbm(spec));
        const double m = mean_of(d);
        double var = 0.0, lag1 = 0.0;
        for (double x : d)
            var += (x - m) * (x - m);
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            lag1 += (d[i] - m) * (d[i + 1] - m);
        rhos.push_back(lag1 / var);
    }
    CHECK(median_of(rhos) == doctest::Approx(0.51572).epsilon(0.1));
}

TEST_CASE("unit-interval scaling is a pure rescale of the unit-step path") {
    FbmSpec spec;
    spec.hurst = 0.6;
    spec.n = 256;
    spec.seed = 9;
    const std::vector<double> steps = gen_fbm(spec);
    spec.normalization = Normalization::UnitInterval;
    const std::vector<double> unit = gen_fbm(spec);
    const double k = std::pow(1.0 / 256.0, 0.6);
    for (std::size_t i = 0; i < steps.size(); ++i)
        CHECK(unit[i] == doctest::Approx(steps[i] * k).epsilon(1e-12));
}

TEST_CASE("variance scale 4 doubles the path exactly") {
    FbmSpec spec;
    spec.hurst = 0.4;
    spec.n = 128;
    spec.seed = 3;
    const std::vector<double> base = gen_fbm(spec);
    spec.variance_scale = 4.0;
    const std::vector<double> scaled = gen_fbm(spec);
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(scaled[i] == 2.0 * base[i]);
}

TEST_CASE("spec validation") {
    FbmSpec spec;
    spec.hurst = 0.0;
    CHECK_THROWS_AS(gen_fbm(spec), OutOfDomainError);
    spec.hurst = 1.0;
    CHECK_THROWS_AS(gen_fbm(spec), OutOfDomainError);
    spec = FbmSpec{};
    spec.n = 1;
    CHECK_THROWS_AS(gen_fbm(spec), OutOfDomainError);
    spec = FbmSpec{};
    spec.variance_scale = 0.0;
    CHECK_THROWS_AS(gen_fbm(spec), OutOfDomainError);
}

TEST_CASE("piecewise paths join continuously") {
    const std::vector<HurstBlock> schedule = {{0.3, 64}, {0.8, 64}, {0.5, 64}};
    const std::vector<double> y = gen_piecewise_fbm(schedule, 11);
    REQUIRE(y.size() == 192);
    CHECK(y[0] == 0.0);
    // block joints repeat the previous sample exactly
    CHECK(y[64] == y[63]);
    CHECK(y[128] == y[127]);
    CHECK(gen_piecewise_fbm(schedule, 11) == y);
    CHECK(gen_piecewise_fbm(schedule, 12) != y);

    CHECK_THROWS_AS(gen_piecewise_fbm({}, 0), EmptyInputError);
    CHECK_THROWS_AS(gen_piecewise_fbm({{1.2, 64}}, 0), OutOfDomainError);
    CHECK_THROWS_AS(gen_piecewise_fbm({{0.5, 1}}, 0), OutOfDomainError);
}

TEST_CASE("box counting sees a line as one-dimensional") {
    std::vector<double> y(4096);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = 0.25 * static_cast<double>(i) + 3.0;
    const FractalScan scan = box_counting_dimension(y);
    CHECK(scan.dimension <= 1.1);
    CHECK(scan.hurst_est >= 0.9);

    std::vector<double> y2(256);
    for (std::size_t i = 0; i < y2.size(); ++i)
        y2[i] = -1.5 * static_cast<double>(i);
    CHECK(box_counting_dimension(y2).dimension <= 1.1);
}

TEST_CASE("box counting of rough paths lands between the line and the plane") {
    FbmSpec spec;
    spec.hurst = 0.5;
    spec.n = 4096;
    std::vector<double> dims;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        spec.seed = seed;
        const FractalScan scan = box_counting_dimension(gen_fbm(spec));
        dims.push_back(scan.dimension);
        CHECK(scan.log_fit.r2 > 0.98);
        REQUIRE(scan.counts.size() == scan.scales.size());
        for (std::size_t i = 0; i + 1 < scan.counts.size(); ++i)
            CHECK(scan.counts[i] >= scan.counts[i + 1]);
        CHECK(scan.scales.front() == 4u);
        CHECK(scan.scales.back() == 512u);
    }
    const double med = median_of(dims);
    CHECK(med > 1.3);
    CHECK(med < 1.6);
}

TEST_CASE("box counting validation") {
    CHECK_THROWS_AS(box_counting_dimension(std::vector<double>(64, 2.0)), DegenerateSignalError);
    CHECK_THROWS_AS(box_counting_dimension({1.0}), TooFewPointsError);
    std::vector<double> y(64);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = static_cast<double>(i % 7);
    CHECK_THROWS_AS(box_counting_dimension(y, {1, 2, 4, 80}), OutOfDomainError);
    CHECK_THROWS_AS(box_counting_dimension(y, {4}), TooFewPointsError);
    CHECK_NOTHROW(box_counting_dimension(y, {2, 4, 8}));
    // scale order does not matter
    const FractalScan a = box_counting_dimension(y, {8, 2, 4});
    const FractalScan b = box_counting_dimension(y, {2, 4, 8});
    CHECK(a.dimension == b.dimension);
}

TEST_CASE("variance scaling recovers the roughness exponent") {
    FbmSpec spec;
    spec.n = 2048;
    for (double h : {0.3, 0.5, 0.7}) {
        spec.hurst = h;
        std::vector<double> ests;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            spec.seed = seed;
            ests.push_back(variance_scaling_hurst(gen_fbm(spec)));
        }
        CHECK(std::abs(median_of(ests) - h) <= 0.07);
    }
}

TEST_CASE("variance scaling endpoints") {
    std::vector<double> line(512);
    for (std::size_t i = 0; i < line.size(); ++i)
        line[i] = 0.7 * static_cast<double>(i) + 1.0;
    CHECK(variance_scaling_hurst(line) == doctest::Approx(1.0).epsilon(1e-9));

    Rng rng(77);
    std::vector<double> wn(4096);
    for (double& v : wn)
        v = rng.gauss(0.0, 1.0);
    CHECK(variance_scaling_hurst(wn) <= 0.05);

    CHECK_THROWS_AS(variance_scaling_hurst(std::vector<double>(256, 1.0)),
                    DegenerateSignalError);
    std::vector<double> y(32);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = static_cast<double>(i * i);
    CHECK_THROWS_AS(variance_scaling_hurst(y, {1, 40}), OutOfDomainError);
    CHECK_THROWS_AS(variance_scaling_hurst(y, std::vector<std::size_t>{}), EmptyInputError);
    CHECK_THROWS_AS(variance_scaling_hurst(y, {4}), TooFewPointsError);
}
