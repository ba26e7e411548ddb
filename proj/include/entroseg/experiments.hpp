#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "entroseg/fbm.hpp"
#include "entroseg/fitting.hpp"
#include "entroseg/segmentation.hpp"
#include "entroseg/signal.hpp"

namespace entroseg {

// ---- noise robustness sweep ------------------------------------------------

struct SweepConfig {
    std::vector<double> noise_stds = {0.0, 0.02, 0.03, 0.5};
    std::vector<double> rm2_grid = {0.97, 0.98, 0.988, 0.99, 0.992, 0.995, 0.998, 0.999};
    std::size_t trials = 50;
    std::uint64_t seed = 100;
    std::size_t target_lines = 4;
    double rate_threshold = 0.9; // fraction of trials that must hit target_lines
    std::size_t max_lines = 64;
    std::size_t min_len = 2;
};

struct SweepRow {
    double noise_std = 0.0;
    bool found = false;        // some grid threshold reached the rate
    double optimal_rm2 = 0.0;  // largest qualifying threshold; NaN when !found
    double success_rate = 0.0; // rate at the optimal threshold
    std::size_t lines_found = 0; // modal segment count at the optimal threshold
    double max_slope_err = 0.0;  // worst slope drift of the 3 longest lines vs clean
};

// same noise draws are reused across the whole threshold grid, so rates for a
// given std differ only through the threshold
std::vector<SweepRow> noise_sweep(const Signal& base, const SweepConfig& cfg = {});

// ---- dominant tangent vs roughness ------------------------------------------

struct TangentSample {
    double hurst = 0.0;
    double tangent = 0.0; // slope of the longest entropy segment
};

struct TangentConfig {
    std::vector<double> hursts = {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::size_t block = 64;
    std::size_t trials = 30;
    double rm2 = 0.988;
    std::uint64_t seed = 3000;
};

struct TangentStudy {
    std::vector<double> hursts;
    std::vector<TangentSample> samples;
    std::vector<double> medians; // per hurst, config order
    ExpFit fit;                  // tangent ~ a * exp(b * hurst)
};

TangentStudy tangent_vs_hurst(const TangentConfig& cfg = {});

// ---- cantilever mode-shape fixture -------------------------------------------

// first clamped-free bending mode on n equispaced stations, tip-normalized
std::vector<double> clamped_free_mode(std::size_t n);

struct BeamFixture {
    Signal signal; // x = station index
    std::size_t damage_idx = 0;
    double severity = 0.0;
    double noise_std = 0.0;
};

// severity scales a one-station offset anchored to the local slope, which
// kinks the shape at damage_idx; no seed means a noiseless fixture
BeamFixture make_beam_fixture(double severity,
                              std::optional<std::uint64_t> seed = std::nullopt,
                              double noise_std = 2e-4,
                              std::size_t n = 60,
                              std::size_t damage_idx = 20);

struct BeamRun {
    std::vector<LineSegment> segments; // of the entropy curve
    std::vector<SegmentLabel> labels;
    double nearest_singularity_dist = 0.0; // NaN when nothing is labeled singular
    std::size_t interior_singularities = 0; // singular segments inside the middle half
    double median_len_before = 0.0; // segments ending at or before the damage station
    double median_len_after = 0.0;  // segments starting at or after it
};

BeamRun run_beam_study(const BeamFixture& fixture, double rm2 = 0.999,
                       double short_frac = 0.25, std::size_t min_len = 2);

} // namespace entroseg
