#include "entroseg/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace entroseg {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// json serializes non-finite numbers as null; mirror that in csv with an
// empty field
std::string fmt_or_empty(double v) {
    return std::isfinite(v) ? fmt(v) : std::string();
}

} // namespace

std::string label_name(SegmentLabel label) {
    return label == SegmentLabel::Singularity ? "singularity" : "homogeneous";
}

nlohmann::json segments_report(const Signal& s, const std::vector<LineSegment>& segments,
                               const std::vector<SegmentLabel>& labels,
                               const SegmentationConfig& cfg, bool entropy_applied,
                               double short_frac) {
    json out;
    out["segments"] = json::array();
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const LineSegment& sg = segments[i];
        json row;
        row["start"] = sg.start_idx;
        row["end"] = sg.end_idx;
        row["a"] = sg.fit.a;
        row["b"] = sg.fit.b;
        row["r2"] = sg.fit.r2;
        row["error"] = sg.fit.mean_abs_error;
        row["alpha_deg"] = std::atan(sg.fit.a) * 180.0 / 3.14159265358979323846;
        row["length"] = sg.length_pts();
        row["position"] = s.x[sg.end_idx];
        row["label"] = label_name(labels[i]);
        out["segments"].push_back(std::move(row));
    }
    out["config"] = {
        {"rm2", cfg.rm2},
        {"max_lines", cfg.max_lines},
        {"min_len", cfg.min_len},
        {"from_right", cfg.from_right},
        {"refine_boundaries", cfg.refine_boundaries},
        {"entropy", entropy_applied},
        {"short_frac", short_frac},
    };
    return out;
}

std::string segments_csv(const Signal& s, const std::vector<LineSegment>& segments,
                         const std::vector<SegmentLabel>& labels) {
    std::ostringstream os;
    os << "start,end,a,b,r2,error,alpha_deg,length,position,label\n";
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const LineSegment& sg = segments[i];
        os << sg.start_idx << ',' << sg.end_idx << ',' << fmt(sg.fit.a) << ',' << fmt(sg.fit.b)
           << ',' << fmt(sg.fit.r2) << ',' << fmt(sg.fit.mean_abs_error) << ','
           << fmt(std::atan(sg.fit.a) * 180.0 / 3.14159265358979323846) << ','
           << sg.length_pts() << ',' << fmt(s.x[sg.end_idx]) << ',' << label_name(labels[i])
           << '\n';
    }
    return os.str();
}

nlohmann::json entropy_report(const EntropyCurve& curve) {
    return json{
        {"x", curve.x},
        {"h", curve.h},
        {"mean_abs_diff", curve.stats.mean_abs_diff},
        {"std_abs_diff", curve.stats.std_abs_diff},
    };
}

nlohmann::json samples_report(const std::vector<double>& y, const nlohmann::json& meta) {
    json out = meta;
    out["n"] = y.size();
    out["samples"] = y;
    return out;
}

nlohmann::json fracdim_report(const FractalScan& scan) {
    return json{
        {"scales", scan.scales},
        {"counts", scan.counts},
        {"dimension", scan.dimension},
        {"hurst_est", scan.hurst_est},
        {"fit", {{"a", scan.log_fit.a}, {"b", scan.log_fit.b}, {"r2", scan.log_fit.r2}}},
    };
}

std::string fracdim_csv(const FractalScan& scan) {
    std::ostringstream os;
    os << "scale,count\n";
    for (std::size_t i = 0; i < scan.scales.size(); ++i)
        os << scan.scales[i] << ',' << fmt(scan.counts[i]) << '\n';
    return os.str();
}

nlohmann::json sweep_report(const std::vector<SweepRow>& rows, const SweepConfig& cfg) {
    json out;
    out["rows"] = json::array();
    for (const SweepRow& r : rows) {
        json row;
        row["noise_std"] = r.noise_std;
        row["optimal_rm2"] = r.found ? json(r.optimal_rm2) : json(nullptr);
        row["success_rate"] = r.found ? json(r.success_rate) : json(nullptr);
        row["lines_found"] = r.found ? json(r.lines_found) : json(nullptr);
        row["max_slope_err"] =
            r.found && std::isfinite(r.max_slope_err) ? json(r.max_slope_err) : json(nullptr);
        out["rows"].push_back(std::move(row));
    }
    out["config"] = {
        {"rm2_grid", cfg.rm2_grid},     {"trials", cfg.trials},
        {"seed", cfg.seed},             {"target_lines", cfg.target_lines},
        {"rate_threshold", cfg.rate_threshold},
    };
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "noise_std,optimal_rm2,success_rate,lines_found,max_slope_err\n";
    for (const SweepRow& r : rows) {
        os << fmt(r.noise_std) << ',';
        if (r.found)
            os << fmt(r.optimal_rm2) << ',' << fmt(r.success_rate) << ',' << r.lines_found << ','
               << fmt_or_empty(r.max_slope_err);
        else
            os << ",,,";
        os << '\n';
    }
    return os.str();
}

nlohmann::json tangent_report(const TangentStudy& study) {
    json samples = json::array();
    for (const TangentSample& s : study.samples)
        samples.push_back(json{{"hurst", s.hurst}, {"tangent", s.tangent}});
    return json{
        {"hursts", study.hursts},
        {"medians", study.medians},
        {"samples", std::move(samples)},
        {"fit",
         {{"a", study.fit.a},
          {"b", study.fit.b},
          {"r2", study.fit.r2},
          {"iterations", study.fit.iterations},
          {"converged", study.fit.converged}}},
    };
}

std::string tangent_csv(const TangentStudy& study) {
    std::ostringstream os;
    os << "hurst,tangent\n";
    for (const TangentSample& s : study.samples)
        os << fmt(s.hurst) << ',' << fmt(s.tangent) << '\n';
    return os.str();
}

nlohmann::json beam_report(const BeamFixture& fixture, const BeamRun& run) {
    json segments = json::array();
    for (std::size_t i = 0; i < run.segments.size(); ++i) {
        const LineSegment& sg = run.segments[i];
        segments.push_back(json{{"start", sg.start_idx},
                                {"end", sg.end_idx},
                                {"a", sg.fit.a},
                                {"b", sg.fit.b},
                                {"r2", sg.fit.r2},
                                {"error", sg.fit.mean_abs_error},
                                {"length", sg.length_pts()},
                                {"label", label_name(run.labels[i])}});
    }
    return json{
        {"severity", fixture.severity},
        {"damage_idx", fixture.damage_idx},
        {"noise_std", fixture.noise_std},
        {"segments", std::move(segments)},
        {"nearest_singularity_dist", std::isfinite(run.nearest_singularity_dist)
                                         ? json(run.nearest_singularity_dist)
                                         : json(nullptr)},
        {"interior_singularities", run.interior_singularities},
        {"median_len_before",
         std::isfinite(run.median_len_before) ? json(run.median_len_before) : json(nullptr)},
        {"median_len_after",
         std::isfinite(run.median_len_after) ? json(run.median_len_after) : json(nullptr)},
    };
}

} // namespace entroseg
