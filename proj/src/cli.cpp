#include "entroseg/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "entroseg/csv.hpp"
#include "entroseg/entropy.hpp"
#include "entroseg/experiments.hpp"
#include "entroseg/fbm.hpp"
#include "entroseg/report.hpp"
#include "entroseg/segmentation.hpp"
#include "entroseg/signal.hpp"
#include "entroseg/svg.hpp"

namespace entroseg {

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::string out_path;
    std::string svg_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool quiet = false;
};

Signal read_input(const std::string& path) {
    if (path == "-")
        return read_signal_csv(std::cin);
    return read_signal_csv_file(path);
}

void write_text(const std::string& text, const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Error("cannot open output file: " + path);
    f << text;
}

void maybe_svg(const GlobalOpts& g, const std::string& svg) {
    if (g.svg_path.empty())
        return;
    std::ofstream f(g.svg_path);
    if (!f)
        throw Error("cannot open svg file: " + g.svg_path);
    f << svg;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty())
        throw CLI::ValidationError(what, "empty list");
    return out;
}

std::vector<HurstBlock> parse_schedule(const std::string& text) {
    std::vector<HurstBlock> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--schedule", "expected hurst:length pairs");
        try {
            std::size_t p1 = 0, p2 = 0;
            const double h = std::stod(item.substr(0, colon), &p1);
            const unsigned long n = std::stoul(item.substr(colon + 1), &p2);
            if (p1 != colon || p2 != item.size() - colon - 1)
                throw std::invalid_argument(item);
            out.push_back(HurstBlock{h, static_cast<std::size_t>(n)});
        } catch (const std::exception&) {
            throw CLI::ValidationError("--schedule", "cannot parse '" + item + "'");
        }
    }
    if (out.empty())
        throw CLI::ValidationError("--schedule", "empty schedule");
    return out;
}

void note(const GlobalOpts& g, std::ostream& err, const std::string& text) {
    if (!g.quiet)
        err << text << "\n";
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"entropy-of-a-curve signal segmentation toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write machine output to this file instead of stdout");
    app.add_option("--svg", g.svg_path, "also render a figure to this file");
    auto* seed_opt = app.add_option("--seed", g.seed, "random seed");
    app.add_flag("--quiet", g.quiet, "suppress the human-readable summary on stderr");

    // entropy ---------------------------------------------------------------
    auto* c_entropy = app.add_subcommand("entropy", "cumulative absolute-difference transform");
    c_entropy->fallthrough();
    std::string entropy_in = "-";
    c_entropy->add_option("input,--in", entropy_in, "input csv (x,y); '-' for stdin")
        ->capture_default_str();

    // segment ---------------------------------------------------------------
    auto* c_segment = app.add_subcommand("segment", "recursive line detection");
    c_segment->fallthrough();
    std::string segment_in = "-";
    SegmentationConfig scfg;
    double short_frac = 0.25;
    bool apply_entropy = false;
    c_segment->add_option("input,--in", segment_in, "input csv (x,y); '-' for stdin")
        ->capture_default_str();
    c_segment->add_option("--r2", scfg.rm2, "acceptance threshold")->capture_default_str();
    c_segment->add_option("--max-lines", scfg.max_lines, "line budget")->capture_default_str();
    c_segment->add_option("--min-len", scfg.min_len, "smallest window in samples")
        ->capture_default_str();
    c_segment->add_flag("--entropy", apply_entropy, "transform the signal before segmenting");
    c_segment->add_flag("--from-right", scfg.from_right, "mirror traversal");
    c_segment->add_flag("--refine", scfg.refine_boundaries, "post-pass joint refinement");
    c_segment->add_option("--short-frac", short_frac, "singularity length fraction")
        ->capture_default_str();

    // fbm -------------------------------------------------------------------
    auto* c_fbm = app.add_subcommand("fbm", "synthesize fractional Brownian motion");
    c_fbm->fallthrough();
    FbmSpec fspec;
    bool unit_interval = false;
    std::string schedule_text;
    c_fbm->add_option("--hurst", fspec.hurst, "roughness exponent")->capture_default_str();
    c_fbm->add_option("--n", fspec.n, "path samples")->capture_default_str();
    c_fbm->add_option("--variance", fspec.variance_scale, "unit-step increment variance")
        ->capture_default_str();
    c_fbm->add_flag("--unit-interval", unit_interval, "sample the path on t in [0,1]");
    c_fbm->add_option("--schedule", schedule_text,
                      "piecewise plan as hurst:length,... (overrides --hurst/--n)");

    // fracdim ---------------------------------------------------------------
    auto* c_frac = app.add_subcommand("fracdim", "graph box-counting dimension");
    c_frac->fallthrough();
    std::string frac_in;
    double frac_hurst = 0.5;
    std::size_t frac_n = 4096;
    std::string scales_text;
    c_frac->add_option("input,--in", frac_in, "input csv; omitted means synthesize a path");
    c_frac->add_option("--hurst", frac_hurst, "hurst of the synthesized path")
        ->capture_default_str();
    c_frac->add_option("--n", frac_n, "samples of the synthesized path")->capture_default_str();
    c_frac->add_option("--scales", scales_text, "comma-separated box sides in samples");

    // sweep -----------------------------------------------------------------
    auto* c_sweep = app.add_subcommand("sweep", "noise robustness of line detection");
    c_sweep->fallthrough();
    SweepConfig swcfg;
    std::string stds_text, grid_text;
    c_sweep->add_option("--stds", stds_text, "noise levels, comma separated");
    c_sweep->add_option("--grid", grid_text, "candidate thresholds, comma separated");
    c_sweep->add_option("--trials", swcfg.trials, "noisy trials per level")->capture_default_str();
    c_sweep->add_option("--target", swcfg.target_lines, "expected line count")
        ->capture_default_str();
    c_sweep->add_option("--rate", swcfg.rate_threshold, "required success rate")
        ->capture_default_str();

    // tangent-study ---------------------------------------------------------
    auto* c_tan = app.add_subcommand("tangent-study", "dominant tangent vs roughness");
    c_tan->fallthrough();
    TangentConfig tcfg;
    std::string hursts_text;
    c_tan->add_option("--hursts", hursts_text, "hurst grid, comma separated");
    c_tan->add_option("--block", tcfg.block, "path samples per trial")->capture_default_str();
    c_tan->add_option("--trials", tcfg.trials, "trials per hurst")->capture_default_str();
    c_tan->add_option("--r2", tcfg.rm2, "acceptance threshold")->capture_default_str();

    // beam ------------------------------------------------------------------
    auto* c_beam = app.add_subcommand("beam", "damage localization on a cantilever mode");
    c_beam->fallthrough();
    double severity = 0.05, beam_noise = 2e-4, beam_rm2 = 0.999, beam_short_frac = 0.25;
    std::size_t beam_n = 60, damage_idx = 20;
    bool noiseless = false;
    c_beam->add_option("--severity", severity, "relative local slope offset")
        ->capture_default_str();
    c_beam->add_option("--noise", beam_noise, "measurement noise std")->capture_default_str();
    c_beam->add_flag("--noiseless", noiseless, "skip measurement noise");
    c_beam->add_option("--n", beam_n, "stations")->capture_default_str();
    c_beam->add_option("--damage-idx", damage_idx, "damaged station")->capture_default_str();
    c_beam->add_option("--r2", beam_rm2, "acceptance threshold")->capture_default_str();
    c_beam->add_option("--short-frac", beam_short_frac, "singularity length fraction")
        ->capture_default_str();

    std::vector<std::string> full = args;
    full.insert(full.begin(), "entroseg");
    std::vector<char*> argv;
    argv.reserve(full.size());
    for (std::string& s : full)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    g.seed_given = seed_opt->count() > 0;

    try {
        if (*c_entropy) {
            const Signal s = read_input(entropy_in);
            const EntropyCurve curve = entropy_transform(s);
            if (g.format == "csv") {
                std::ostringstream os;
                write_signal_csv(os, curve.as_signal(), "x", "h");
                write_text(os.str(), g.out_path, out);
            } else {
                write_text(dump(entropy_report(curve)), g.out_path, out);
            }
            maybe_svg(g, svg_signal_plot(curve.as_signal(), "entropy curve"));
            std::ostringstream msg;
            msg << "mean |dy| " << curve.stats.mean_abs_diff << ", std |dy| "
                << curve.stats.std_abs_diff;
            note(g, err, msg.str());
        } else if (*c_segment) {
            Signal s = read_input(segment_in);
            if (apply_entropy)
                s = entropy_transform(s).as_signal();
            const std::vector<LineSegment> segs = segment(s, scfg);
            const std::vector<SegmentLabel> labels = classify(segs, short_frac);
            if (g.format == "csv")
                write_text(segments_csv(s, segs, labels), g.out_path, out);
            else
                write_text(dump(segments_report(s, segs, labels, scfg, apply_entropy, short_frac)),
                           g.out_path, out);
            maybe_svg(g, svg_segment_plot(s, segs, labels, "detected lines"));
            std::size_t singular = 0;
            for (const SegmentLabel& l : labels)
                singular += l == SegmentLabel::Singularity;
            std::ostringstream msg;
            msg << segs.size() << " lines, " << singular << " singular";
            note(g, err, msg.str());
        } else if (*c_fbm) {
            std::vector<double> y;
            nlohmann::json meta;
            if (!schedule_text.empty()) {
                const std::vector<HurstBlock> sched = parse_schedule(schedule_text);
                y = gen_piecewise_fbm(sched, g.seed);
                meta["schedule"] = nlohmann::json::array();
                for (const HurstBlock& b : sched)
                    meta["schedule"].push_back({{"hurst", b.hurst}, {"n", b.n}});
                meta["seed"] = g.seed;
            } else {
                fspec.seed = g.seed;
                fspec.normalization =
                    unit_interval ? Normalization::UnitInterval : Normalization::UnitStep;
                y = gen_fbm(fspec);
                meta = {{"hurst", fspec.hurst},
                        {"seed", fspec.seed},
                        {"variance_scale", fspec.variance_scale},
                        {"normalization", unit_interval ? "unit_interval" : "unit_step"}};
            }
            const Signal s = make_index_signal(y);
            if (g.format == "csv") {
                std::ostringstream os;
                write_signal_csv(os, s);
                write_text(os.str(), g.out_path, out);
            } else {
                write_text(dump(samples_report(y, meta)), g.out_path, out);
            }
            maybe_svg(g, svg_signal_plot(s, "synthesized path"));
            note(g, err, "generated " + std::to_string(y.size()) + " samples");
        } else if (*c_frac) {
            std::vector<double> y;
            if (!frac_in.empty()) {
                y = read_input(frac_in).y;
            } else {
                FbmSpec spec;
                spec.hurst = frac_hurst;
                spec.n = frac_n;
                spec.seed = g.seed;
                y = gen_fbm(spec);
            }
            std::vector<std::size_t> scales;
            if (!scales_text.empty())
                for (double v : parse_double_list(scales_text, "--scales"))
                    scales.push_back(static_cast<std::size_t>(v));
            const FractalScan scan = box_counting_dimension(y, scales);
            if (g.format == "csv")
                write_text(fracdim_csv(scan), g.out_path, out);
            else
                write_text(dump(fracdim_report(scan)), g.out_path, out);
            maybe_svg(g, svg_loglog_plot(scan, "box counting"));
            std::ostringstream msg;
            msg << "dimension " << scan.dimension << ", hurst_est " << scan.hurst_est
                << ", fit r2 " << scan.log_fit.r2;
            note(g, err, msg.str());
        } else if (*c_sweep) {
            if (!stds_text.empty())
                swcfg.noise_stds = parse_double_list(stds_text, "--stds");
            if (!grid_text.empty())
                swcfg.rm2_grid = parse_double_list(grid_text, "--grid");
            if (g.seed_given)
                swcfg.seed = g.seed;
            const Signal base = make_piecewise_test_signal();
            const std::vector<SweepRow> rows = noise_sweep(base, swcfg);
            if (g.format == "csv")
                write_text(sweep_csv(rows), g.out_path, out);
            else
                write_text(dump(sweep_report(rows, swcfg)), g.out_path, out);
            maybe_svg(g, svg_sweep_plot(rows, "noise robustness"));
            for (const SweepRow& r : rows) {
                std::ostringstream msg;
                msg << "std " << r.noise_std << ": ";
                if (r.found)
                    msg << "optimal rm2 " << r.optimal_rm2 << " (rate " << r.success_rate
                        << ", lines " << r.lines_found << ")";
                else
                    msg << "no threshold reached the rate";
                note(g, err, msg.str());
            }
        } else if (*c_tan) {
            if (!hursts_text.empty())
                tcfg.hursts = parse_double_list(hursts_text, "--hursts");
            if (g.seed_given)
                tcfg.seed = g.seed;
            const TangentStudy study = tangent_vs_hurst(tcfg);
            if (g.format == "csv")
                write_text(tangent_csv(study), g.out_path, out);
            else
                write_text(dump(tangent_report(study)), g.out_path, out);
            maybe_svg(g, svg_tangent_plot(study, "dominant tangent vs hurst"));
            std::ostringstream msg;
            msg << "fit a " << study.fit.a << ", b " << study.fit.b << ", r2 " << study.fit.r2;
            note(g, err, msg.str());
        } else if (*c_beam) {
            const std::optional<std::uint64_t> seed =
                noiseless ? std::nullopt : std::optional<std::uint64_t>(g.seed);
            const BeamFixture fx =
                make_beam_fixture(severity, seed, beam_noise, beam_n, damage_idx);
            const BeamRun run = run_beam_study(fx, beam_rm2, beam_short_frac);
            if (g.format == "csv") {
                const Signal h = entropy_transform(fx.signal).as_signal();
                write_text(segments_csv(h, run.segments, run.labels), g.out_path, out);
            } else {
                write_text(dump(beam_report(fx, run)), g.out_path, out);
            }
            maybe_svg(g, svg_beam_plot(fx, run, "mode shape and singular zones"));
            std::ostringstream msg;
            if (std::isfinite(run.nearest_singularity_dist))
                msg << "nearest singular segment is " << run.nearest_singularity_dist
                    << " stations from station " << fx.damage_idx;
            else
                msg << "no singular segment detected";
            note(g, err, msg.str());
        }
    } catch (const CLI::ParseError& e) {
        // list/schedule arguments are validated after parsing
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TooManyLinesError& e) {
        err << "error: " << e.what() << " (" << e.partial.size() << " lines accepted)\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace entroseg
