#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entroseg/fitting.hpp"
#include "entroseg/signal.hpp"
#include "entroseg/types.hpp"

namespace entroseg {

struct SegmentationConfig {
    double rm2 = 0.988;       // acceptance threshold on r^2
    std::size_t max_lines = 64;
    std::size_t min_len = 2;  // smallest window the shrink may reach, in samples
    bool from_right = false;  // mirror traversal: anchor windows at the right end
    bool refine_boundaries = false; // post-pass: move joints by variance-change descent
};

struct LineSegment {
    std::size_t start_idx = 0;
    std::size_t end_idx = 0; // inclusive; shared with the next segment's start
    LineFit fit;

    std::size_t length_pts() const { return end_idx - start_idx + 1; }
};

enum class SegmentLabel { Homogeneous, Singularity };

// one row of the Hough-parameter representation of a detected line
struct HoughPoint {
    double position = 0.0;   // abscissa of the segment's right end
    std::size_t length_pts = 0;
    double alpha_deg = 0.0;  // atan(slope) in degrees
    double intercept = 0.0;
    double mean_abs_error = 0.0;
};

struct TraceEntry {
    std::size_t segment_index = 0;
    std::size_t start_idx = 0;
    std::size_t end_idx = 0;
    std::size_t fits = 0; // window fits evaluated before this segment was accepted
};

struct DetectionTrace {
    std::vector<TraceEntry> entries;
    std::size_t total_fits = 0;
};

class TooManyLinesError : public Error {
public:
    TooManyLinesError(const std::string& msg, std::vector<LineSegment> done)
        : Error(msg), partial(std::move(done)) {}
    std::vector<LineSegment> partial; // segments accepted before the cap was hit
};

// greedy shrinking-window detection; trace (optional) records per-segment work
std::vector<LineSegment> segment(const Signal& s, const SegmentationConfig& cfg = {},
                                 DetectionTrace* trace = nullptr);

// coordinate descent on joint positions, driven by the variance of first
// differences on each side; bounds include both endpoints and come back sorted
std::vector<std::size_t> refine_change_points(const std::vector<double>& y,
                                              std::vector<std::size_t> bounds,
                                              std::size_t min_len = 2,
                                              std::size_t sweeps = 30);

std::vector<SegmentLabel> classify(const std::vector<LineSegment>& segments,
                                   double short_frac = 0.25);

std::vector<HoughPoint> to_hough(const Signal& s, const std::vector<LineSegment>& segments);

} // namespace entroseg
