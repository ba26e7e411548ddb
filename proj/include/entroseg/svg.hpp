#pragma once

#include <string>
#include <vector>

#include "entroseg/experiments.hpp"
#include "entroseg/fbm.hpp"
#include "entroseg/segmentation.hpp"
#include "entroseg/signal.hpp"

namespace entroseg {

// every function returns a complete standalone SVG document

std::string svg_signal_plot(const Signal& s, const std::string& title);

// signal polyline plus each fitted line drawn over its own span,
// singular segments highlighted
std::string svg_segment_plot(const Signal& s, const std::vector<LineSegment>& segments,
                             const std::vector<SegmentLabel>& labels, const std::string& title);

// angle against position, marker area tracking segment length
std::string svg_hough_plot(const std::vector<HoughPoint>& points, const std::string& title);

std::string svg_loglog_plot(const FractalScan& scan, const std::string& title);

std::string svg_sweep_plot(const std::vector<SweepRow>& rows, const std::string& title);

std::string svg_tangent_plot(const TangentStudy& study, const std::string& title);

std::string svg_beam_plot(const BeamFixture& fixture, const BeamRun& run,
                          const std::string& title);

} // namespace entroseg
