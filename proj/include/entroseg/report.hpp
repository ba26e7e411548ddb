#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "entroseg/entropy.hpp"
#include "entroseg/experiments.hpp"
#include "entroseg/fbm.hpp"
#include "entroseg/segmentation.hpp"
#include "entroseg/signal.hpp"

namespace entroseg {

std::string label_name(SegmentLabel label); // "homogeneous" / "singularity"

// {"segments":[{start,end,a,b,r2,error,alpha_deg,length,position,label}...],
//  "config":{rm2,max_lines,min_len,from_right,refine_boundaries,entropy,short_frac}}
nlohmann::json segments_report(const Signal& s, const std::vector<LineSegment>& segments,
                               const std::vector<SegmentLabel>& labels,
                               const SegmentationConfig& cfg, bool entropy_applied,
                               double short_frac);
std::string segments_csv(const Signal& s, const std::vector<LineSegment>& segments,
                         const std::vector<SegmentLabel>& labels);

nlohmann::json entropy_report(const EntropyCurve& curve);

nlohmann::json samples_report(const std::vector<double>& y, const nlohmann::json& meta);

nlohmann::json fracdim_report(const FractalScan& scan);
std::string fracdim_csv(const FractalScan& scan);

nlohmann::json sweep_report(const std::vector<SweepRow>& rows, const SweepConfig& cfg);
std::string sweep_csv(const std::vector<SweepRow>& rows);

nlohmann::json tangent_report(const TangentStudy& study);
std::string tangent_csv(const TangentStudy& study);

nlohmann::json beam_report(const BeamFixture& fixture, const BeamRun& run);

} // namespace entroseg
