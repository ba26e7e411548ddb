#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entroseg/entropy.hpp"
#include "entroseg/fbm.hpp"
#include "entroseg/fitting.hpp"
#include "entroseg/segmentation.hpp"
#include "entroseg/signal.hpp"

namespace py = pybind11;
using namespace entroseg;

namespace {

Signal to_signal(const std::vector<double>& x, const std::vector<double>& y) {
    return make_signal(x, y);
}

py::dict fit_dict(const LineFit& f) {
    py::dict d;
    d["a"] = f.a;
    d["b"] = f.b;
    d["r2"] = f.r2;
    d["error"] = f.mean_abs_error;
    return d;
}

} // namespace

PYBIND11_MODULE(_entroseg, m) {
    m.doc() = "entropy-of-a-curve signal segmentation toolkit";

    py::register_exception<Error>(m, "Error");

    m.def(
        "entropy_transform",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            const EntropyCurve c = entropy_transform(to_signal(x, y));
            py::dict d;
            d["x"] = c.x;
            d["h"] = c.h;
            d["mean_abs_diff"] = c.stats.mean_abs_diff;
            d["std_abs_diff"] = c.stats.std_abs_diff;
            return d;
        },
        py::arg("x"), py::arg("y"),
        "Cumulative absolute-difference transform with increment statistics.");

    m.def(
        "segment",
        [](const std::vector<double>& x, const std::vector<double>& y, double rm2,
           std::size_t max_lines, std::size_t min_len, bool from_right, bool refine,
           double short_frac) {
            const Signal s = to_signal(x, y);
            SegmentationConfig cfg;
            cfg.rm2 = rm2;
            cfg.max_lines = max_lines;
            cfg.min_len = min_len;
            cfg.from_right = from_right;
            cfg.refine_boundaries = refine;
            const std::vector<LineSegment> segs = segment(s, cfg);
            const std::vector<SegmentLabel> labels = classify(segs, short_frac);
            const std::vector<HoughPoint> hough = to_hough(s, segs);
            py::list out;
            for (std::size_t i = 0; i < segs.size(); ++i) {
                py::dict d = fit_dict(segs[i].fit);
                d["start"] = segs[i].start_idx;
                d["end"] = segs[i].end_idx;
                d["length"] = segs[i].length_pts();
                d["alpha_deg"] = hough[i].alpha_deg;
                d["position"] = hough[i].position;
                d["label"] = labels[i] == SegmentLabel::Singularity ? "singularity"
                                                                    : "homogeneous";
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("x"), py::arg("y"), py::arg("rm2") = 0.988, py::arg("max_lines") = 64,
        py::arg("min_len") = 2, py::arg("from_right") = false, py::arg("refine") = false,
        py::arg("short_frac") = 0.25,
        "Recursive shrinking-window line detection; returns one dict per segment.");

    m.def(
        "gen_fbm",
        [](double hurst, std::size_t n, double variance_scale, std::uint64_t seed,
           bool unit_interval) {
            FbmSpec spec;
            spec.hurst = hurst;
            spec.n = n;
            spec.variance_scale = variance_scale;
            spec.seed = seed;
            spec.normalization =
                unit_interval ? Normalization::UnitInterval : Normalization::UnitStep;
            return gen_fbm(spec);
        },
        py::arg("hurst") = 0.5, py::arg("n") = 256, py::arg("variance_scale") = 1.0,
        py::arg("seed") = 0, py::arg("unit_interval") = false,
        "Fractional Brownian motion path starting at 0.");

    m.def(
        "gen_piecewise_fbm",
        [](const std::vector<std::pair<double, std::size_t>>& schedule, std::uint64_t seed) {
            std::vector<HurstBlock> blocks;
            blocks.reserve(schedule.size());
            for (const auto& [h, n] : schedule)
                blocks.push_back(HurstBlock{h, n});
            return gen_piecewise_fbm(blocks, seed);
        },
        py::arg("schedule"), py::arg("seed") = 0,
        "Continuous concatenation of per-block fBm paths; schedule is [(hurst, n), ...].");

    m.def(
        "box_counting_dimension",
        [](const std::vector<double>& y, const std::vector<std::size_t>& scales) {
            const FractalScan scan = box_counting_dimension(y, scales);
            py::dict d;
            d["scales"] = scan.scales;
            d["counts"] = scan.counts;
            d["dimension"] = scan.dimension;
            d["hurst_est"] = scan.hurst_est;
            d["fit"] = fit_dict(scan.log_fit);
            return d;
        },
        py::arg("y"), py::arg("scales") = std::vector<std::size_t>{},
        "Graph box-counting dimension of a sampled curve.");

    m.def("variance_scaling_hurst", &variance_scaling_hurst, py::arg("y"),
          py::arg("lags") = std::vector<std::size_t>{1, 2, 4, 8, 16},
          "Hurst exponent from the lag scaling of increment variance.");

    m.def(
        "ols_line",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return fit_dict(ols_line(x, y));
        },
        py::arg("x"), py::arg("y"), "Least-squares line fit with r2 and mean absolute error.");

    m.def(
        "fit_exponential",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            const ExpFit f = fit_exponential(x, y);
            py::dict d;
            d["a"] = f.a;
            d["b"] = f.b;
            d["r2"] = f.r2;
            d["iterations"] = f.iterations;
            d["converged"] = f.converged;
            d["se_a"] = f.se_a;
            d["se_b"] = f.se_b;
            return d;
        },
        py::arg("x"), py::arg("y"), "Damped least-squares fit of y = a*exp(b*x).");
}
