#pragma once

#include <cmath>
#include <cstdint>

namespace entroseg {

// Deterministic pseudo-random source: a splitmix64 counter stream feeding a
// Marsaglia polar Gaussian transform. One fixed algorithm so seeds stay
// portable across every module and across runs on the same build.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent stream k derived from one master seed. Trials seeded this
    // way are bit-identical whether run serially or in parallel.
    static Rng substream(std::uint64_t seed, std::uint64_t k) {
        Rng r(0);
        r.state_ = mix(seed + 0x9E3779B97F4A7C15ull * (k + 1));
        return r;
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // uniform in [0,1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal via the polar method; caches the spare deviate
    double gauss() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    double gauss(double mean, double std) { return mean + std * gauss(); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace entroseg
