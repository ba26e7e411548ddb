#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entroseg/fitting.hpp"
#include "entroseg/rng.hpp"
#include "entroseg/types.hpp"

namespace entroseg {

enum class Normalization {
    UnitStep,    // unit-variance increments on an integer grid
    UnitInterval // path sampled at k/n: increments scaled by (1/n)^H
};

struct FbmSpec {
    double hurst = 0.5;
    std::size_t n = 256;         // path samples, including the initial zero
    double variance_scale = 1.0; // variance of a unit-step increment
    std::uint64_t seed = 0;
    Normalization normalization = Normalization::UnitStep;
};

struct HurstBlock {
    double hurst = 0.5;
    std::size_t n = 0;
};

// stationary fractional Gaussian noise by circulant embedding; falls back to
// a dense Cholesky factor when the embedding is not nonnegative definite
std::vector<double> gen_fgn(double hurst, std::size_t n, Rng& rng, double variance_scale = 1.0);

std::vector<double> gen_fbm(const FbmSpec& spec);
std::vector<double> gen_fbm(const FbmSpec& spec, Rng& rng);

// blocks are generated sequentially from one stream; each block starts at the
// previous block's final level, so the joined path is continuous
std::vector<double> gen_piecewise_fbm(const std::vector<HurstBlock>& schedule, std::uint64_t seed);
std::vector<double> gen_piecewise_fbm(const std::vector<HurstBlock>& schedule, Rng& rng);

struct FractalScan {
    std::vector<std::size_t> scales; // box side in samples
    std::vector<double> counts;      // boundary-corrected box counts
    LineFit log_fit;                 // log count vs log normalized scale
    double dimension = 0.0;          // clamped to [1, 2]
    double hurst_est = 0.0;          // 2 - dimension
};

// graph box counting on the curve normalized into the unit square; empty
// scales selects dyadic sides from 4 up to n/8
FractalScan box_counting_dimension(const std::vector<double>& y,
                                   std::vector<std::size_t> scales = {});

// slope of log variance of lag differences vs log lag, halved
double variance_scaling_hurst(const std::vector<double>& y,
                              const std::vector<std::size_t>& lags = {1, 2, 4, 8, 16});

} // namespace entroseg
