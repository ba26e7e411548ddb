// End-to-end acceptance checks. Each check prints one PASS/FAIL line with the
// measured numbers; the exit code is the number of failures, so an all-green
// run exits 0.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "entroseg/entropy.hpp"
#include "entroseg/experiments.hpp"
#include "entroseg/fbm.hpp"
#include "entroseg/fitting.hpp"
#include "entroseg/rng.hpp"
#include "entroseg/segmentation.hpp"
#include "entroseg/signal.hpp"

using namespace entroseg;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("%2d %-28s %s  %s  [%.2f s]\n", id, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str(), seconds);
    if (!pass)
        ++failures;
}

void run(int id, const std::string& name, double time_budget_s,
         const std::function<std::pair<bool, std::string>()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        std::tie(pass, detail) = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= time_budget_s) {
        pass = false;
        detail += " (over the time budget)";
    }
    report(id, name, pass, detail, secs);
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

const std::vector<HurstBlock> kPiecewisePlan = {{0.3, 64}, {0.5, 64}, {0.7, 64}, {0.9, 64}};

// ---- 1: fixture reproduction -----------------------------------------------

std::pair<bool, std::string> fixture_reproduction() {
    const Signal s = make_piecewise_test_signal();
    SegmentationConfig cfg;
    cfg.rm2 = 0.998;
    const std::vector<LineSegment> segs = segment(s, cfg);
    if (segs.size() != 4)
        return {false, fmt("expected 4 segments, got %zu", segs.size())};

    // the three main branches are the three longest segments, in signal order
    std::vector<std::size_t> order = {0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return segs[a].length_pts() > segs[b].length_pts();
    });
    order.resize(3);
    std::sort(order.begin(), order.end());

    const double ref_a[] = {-0.99363, 0.99176, 2.9992};
    const double ref_b[] = {0.06774, 0.055183, 2.0484};
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
        ok = ok && std::abs(segs[order[i]].fit.a - ref_a[i]) <= 0.05;
        ok = ok && std::abs(segs[order[i]].fit.b - ref_b[i]) <= 0.15;
    }
    const std::vector<SegmentLabel> labels = classify(segs);
    for (std::size_t i = 0; i < 4; ++i) {
        const bool joiner = segs[i].length_pts() == 2;
        ok = ok && (labels[i] == (joiner ? SegmentLabel::Singularity : SegmentLabel::Homogeneous));
    }
    return {ok, fmt("slopes %.4f %.4f %.4f intercepts %.4f %.4f %.4f", segs[order[0]].fit.a,
                    segs[order[1]].fit.a, segs[order[2]].fit.a, segs[order[0]].fit.b,
                    segs[order[1]].fit.b, segs[order[2]].fit.b)};
}

// ---- 2: entropy slope matches the mean increment ----------------------------

std::pair<bool, std::string> entropy_linearity() {
    const LinearMeanReport rep = entropy_linear_mean_check(0.1, 100, 200, 0);
    const bool ok = rep.mean_rel_gap <= 0.05 && rep.max_rel_gap <= 0.15;
    return {ok, fmt("mean gap %.4f (<=0.05) max gap %.4f (<=0.15)", rep.mean_rel_gap,
                    rep.max_rel_gap)};
}

// ---- 3: noise robustness -----------------------------------------------------

std::pair<bool, std::string> noise_robustness() {
    const std::vector<SweepRow> rows = noise_sweep(make_piecewise_test_signal(), SweepConfig{});
    bool ok = true;
    std::string detail = "optimal rm2:";
    double prev = 2.0;
    for (const SweepRow& r : rows) {
        if (r.noise_std <= 0.1) {
            ok = ok && r.found && r.optimal_rm2 >= 0.99;
        } else {
            ok = ok && !r.found;
        }
        if (r.found) {
            ok = ok && r.optimal_rm2 <= prev;
            prev = r.optimal_rm2;
            detail += fmt(" %.3g->%.3f", r.noise_std, r.optimal_rm2);
        } else {
            detail += fmt(" %.3g->none", r.noise_std);
        }
    }
    return {ok, detail};
}

// ---- 4: fbm increment scaling law --------------------------------------------

std::pair<bool, std::string> fbm_scaling_law() {
    bool ok = true;
    std::string detail = "medians";
    for (double h : {0.3, 0.5, 0.7, 0.9}) {
        std::vector<double> ests;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            FbmSpec spec;
            spec.hurst = h;
            spec.n = 2048;
            spec.seed = seed;
            ests.push_back(variance_scaling_hurst(gen_fbm(spec)));
        }
        const double med = median_of(ests);
        ok = ok && std::abs(med - h) <= 0.07;
        detail += fmt(" %.1f->%.3f", h, med);
    }

    // pooled lag-1 increment variance at H = 1/2
    double sum = 0.0, sum2 = 0.0;
    std::size_t cnt = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        FbmSpec spec;
        spec.n = 2048;
        spec.seed = seed;
        const std::vector<double> p = gen_fbm(spec);
        for (std::size_t i = 1; i < p.size(); ++i) {
            const double d = p[i] - p[i - 1];
            sum += d;
            sum2 += d * d;
            ++cnt;
        }
    }
    const double mean = sum / static_cast<double>(cnt);
    const double var = sum2 / static_cast<double>(cnt) - mean * mean;
    ok = ok && std::abs(var - 1.0) <= 0.03;
    detail += fmt(" lag1 var %.4f", var);
    return {ok, detail};
}

// ---- 5: fractal dimension ----------------------------------------------------

std::pair<bool, std::string> fractal_dimension() {
    std::vector<double> dims;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        FbmSpec spec;
        spec.n = 4096;
        spec.seed = seed;
        dims.push_back(box_counting_dimension(gen_fbm(spec)).dimension);
    }
    const double d_half = median_of(dims);

    std::vector<double> pw_dims, pw_hursts, pw_r2;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const FractalScan scan = box_counting_dimension(gen_piecewise_fbm(kPiecewisePlan, seed));
        pw_dims.push_back(scan.dimension);
        pw_hursts.push_back(scan.hurst_est);
        pw_r2.push_back(scan.log_fit.r2);
    }
    const double d_pw = median_of(pw_dims);
    const double h_pw = median_of(pw_hursts);
    const double r2_pw = median_of(pw_r2);

    bool ok = std::abs(d_half - 1.5) <= 0.1;
    ok = ok && std::abs(d_pw - 1.49) <= 0.08;
    ok = ok && std::abs(h_pw - 0.52) <= 0.08;
    ok = ok && r2_pw >= 0.9;
    return {ok, fmt("D(H=.5)=%.4f D(pw)=%.4f H(pw)=%.4f fit r2 %.3f", d_half, d_pw, h_pw, r2_pw)};
}

// ---- 6: piecewise-fbm boundary recovery ---------------------------------------

std::pair<bool, std::string> piecewise_boundaries() {
    const std::size_t trials = 30;
    const double corners[] = {64.0, 128.0, 192.0};
    std::size_t hits = 0;
    SegmentationConfig cfg;
    cfg.rm2 = 0.988;
    cfg.refine_boundaries = true;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(400, t);
        const std::vector<double> y = gen_piecewise_fbm(kPiecewisePlan, rng);
        const Signal h = entropy_transform(make_index_signal(y)).as_signal();
        const std::vector<LineSegment> segs = segment(h, cfg);
        if (segs.size() < 4)
            continue;
        bool all = true;
        for (double c : corners) {
            double best = 1e9;
            for (std::size_t i = 1; i < segs.size(); ++i)
                best = std::min(best,
                                std::abs(static_cast<double>(segs[i].start_idx) - c));
            all = all && best <= 8.0;
        }
        hits += all;
    }
    const double rate = static_cast<double>(hits) / static_cast<double>(trials);
    return {rate >= 0.70, fmt("boundary recovery rate %.3f (need >=0.70, %zu/%zu)", rate, hits,
                              trials)};
}

// ---- 7: dominant tangent vs hurst ---------------------------------------------

std::pair<bool, std::string> tangent_vs_hurst_law() {
    const TangentStudy study = tangent_vs_hurst(TangentConfig{});
    bool ok = study.fit.b < 0.0 && study.fit.r2 >= 0.9;
    std::string detail = fmt("b %.3f r2 %.3f medians", study.fit.b, study.fit.r2);
    for (std::size_t i = 0; i < study.medians.size(); ++i) {
        const double h = study.hursts[i];
        const double med = study.medians[i];
        const double oracle = std::sqrt(2.0 / 3.14159265358979323846) * std::pow(64.0, -h);
        if (i > 0)
            ok = ok && med < study.medians[i - 1];
        const double factor = med / oracle;
        ok = ok && factor >= 1.0 / 1.5 && factor <= 1.5;
        detail += fmt(" %.3f", med);
    }
    return {ok, detail};
}

// ---- 8: beam damage localization ----------------------------------------------

std::pair<bool, std::string> beam_damage() {
    std::size_t hits = 0, med_ok = 0, ctrl_clean = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BeamRun run = run_beam_study(make_beam_fixture(0.05, seed));
        if (std::isfinite(run.nearest_singularity_dist) && run.nearest_singularity_dist <= 2.0)
            ++hits;
        if (std::isfinite(run.median_len_before) && std::isfinite(run.median_len_after) &&
            run.median_len_before < run.median_len_after)
            ++med_ok;
        const BeamRun ctrl = run_beam_study(make_beam_fixture(0.0, seed));
        ctrl_clean += ctrl.interior_singularities == 0;
    }
    const BeamRun quiet = run_beam_study(make_beam_fixture(0.05));
    const bool quiet_ok = quiet.median_len_before < quiet.median_len_after;
    const bool ok = hits >= 18 && ctrl_clean == 20 && med_ok >= 18 && quiet_ok;
    return {ok, fmt("hits %zu/20 clean controls %zu/20 median-shrink %zu/20 noiseless %s", hits,
                    ctrl_clean, med_ok, quiet_ok ? "ok" : "violated")};
}

// ---- 9: greedy matches the exhaustive minimal segmentation ---------------------

struct PwaInstance {
    std::vector<double> y;
};

bool piece_ok(const std::vector<double>& x, const std::vector<double>& y, std::size_t a,
              std::size_t b, double rm2, std::size_t min_len) {
    const std::size_t len = b - a + 1;
    if (len <= min_len)
        return true;
    const LineFit f = ols_line(x.data() + a, y.data() + a, len);
    return f.r2 >= rm2 || f.mean_abs_error == 0.0;
}

PwaInstance gen_instance(Rng& rng) {
    for (;;) {
        const std::size_t n = 6 + rng.next_u64() % 7;
        const std::size_t k = 1 + rng.next_u64() % 3;
        if (k > 1 && n < 2 * k + 2)
            continue;

        // internal breakpoints at least 2 apart and 2 from either end
        std::vector<std::size_t> breaks;
        bool fine = true;
        std::size_t lo = 2;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            const std::size_t hi = n - 3 - 2 * (k - 2 - j);
            if (hi < lo) {
                fine = false;
                break;
            }
            const std::size_t b = lo + rng.next_u64() % (hi - lo + 1);
            breaks.push_back(b);
            lo = b + 2;
        }
        if (!fine)
            continue;

        std::vector<int> slopes;
        while (slopes.size() < k) {
            const int s = static_cast<int>(rng.next_u64() % 11) - 5;
            if (std::find(slopes.begin(), slopes.end(), s) == slopes.end())
                slopes.push_back(s);
        }

        PwaInstance inst;
        inst.y.assign(n, 0.0);
        std::size_t seg = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (seg < breaks.size() && i > breaks[seg])
                ++seg;
            inst.y[i] = inst.y[i - 1] + slopes[seg];
        }
        return inst;
    }
}

std::pair<bool, std::string> minimal_segmentation() {
    Rng rng(2024);
    SegmentationConfig cfg;
    std::size_t agree = 0;
    const std::size_t cases = 100;
    for (std::size_t c = 0; c < cases; ++c) {
        const PwaInstance inst = gen_instance(rng);
        const Signal s = make_index_signal(inst.y);
        const std::size_t n = s.size();

        const std::vector<LineSegment> segs = segment(s, cfg);
        std::vector<std::size_t> got = {0};
        for (const LineSegment& sg : segs)
            got.push_back(sg.end_idx);

        // exhaustive scan over every internal-breakpoint subset
        std::size_t best = n;
        std::set<std::vector<std::size_t>> solutions;
        const std::size_t internals = n - 2;
        for (std::size_t mask = 0; mask < (1ull << internals); ++mask) {
            std::vector<std::size_t> bounds = {0};
            for (std::size_t i = 0; i < internals; ++i)
                if (mask & (1ull << i))
                    bounds.push_back(i + 1);
            bounds.push_back(n - 1);
            bool valid = true;
            for (std::size_t i = 0; i + 1 < bounds.size() && valid; ++i) {
                valid = bounds[i + 1] - bounds[i] >= 1 &&
                        piece_ok(s.x, s.y, bounds[i], bounds[i + 1], cfg.rm2, cfg.min_len);
            }
            if (!valid)
                continue;
            const std::size_t pieces = bounds.size() - 1;
            if (pieces < best) {
                best = pieces;
                solutions.clear();
            }
            if (pieces == best)
                solutions.insert(bounds);
        }
        agree += solutions.count(got) > 0;
    }
    return {agree == cases, fmt("greedy matched a minimal solution in %zu/%zu cases", agree,
                                cases)};
}

// ---- 10: numerical kernels -----------------------------------------------------

std::pair<bool, std::string> numerical_kernels() {
    // residuals of an OLS fit are orthogonal to [1, x]
    double worst_orth = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng = Rng::substream(55, seed);
        const std::size_t n = 64;
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<double>(i) + rng.uniform();
            y[i] = 3.0 * x[i] - 7.0 + rng.gauss(0.0, 2.0);
        }
        const LineFit f = ols_line(x, y);
        double s0 = 0.0, s1 = 0.0, xm = 0.0, scale = 0.0;
        for (double xi : x)
            xm += xi;
        xm /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - (f.a * x[i] + f.b);
            s0 += r;
            s1 += r * (x[i] - xm);
            scale = std::max(scale, std::abs(y[i]));
        }
        worst_orth = std::max(worst_orth, std::abs(s0) / (static_cast<double>(n) * scale));
        worst_orth = std::max(worst_orth, std::abs(s1) / (static_cast<double>(n) * scale * scale));
    }

    // model partials used by the exponential fit vs central differences
    double worst_jac = 0.0;
    const double pts[][3] = {{2.0, 0.5, 1.3}, {0.7, -1.1, 2.0}, {1.5, 0.05, 7.0}};
    for (const double* p : pts) {
        const double a = p[0], b = p[1], x = p[2];
        const double ja = std::exp(b * x);
        const double jb = a * x * std::exp(b * x);
        const double ha = 1e-6 * std::max(1.0, std::abs(a));
        const double hb = 1e-7 * std::max(1.0, std::abs(b));
        const double fda = ((a + ha) * std::exp(b * x) - (a - ha) * std::exp(b * x)) / (2.0 * ha);
        const double fdb = (a * std::exp((b + hb) * x) - a * std::exp((b - hb) * x)) / (2.0 * hb);
        worst_jac = std::max(worst_jac, std::abs(ja - fda) / std::max(1.0, std::abs(ja)));
        worst_jac = std::max(worst_jac, std::abs(jb - fdb) / std::max(1.0, std::abs(jb)));
    }

    // exact-data round trip
    std::vector<double> x(40), y(40);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = static_cast<double>(i) * 0.05;
        y[i] = 2.5 * std::exp(0.7 * x[i]);
    }
    const ExpFit ef = fit_exponential(x, y);
    const double rt = std::max(std::abs(ef.a - 2.5), std::abs(ef.b - 0.7));

    const bool ok = worst_orth <= 1e-9 && worst_jac <= 1e-6 && rt <= 1e-6;
    return {ok, fmt("orthogonality %.2e jacobian %.2e round-trip %.2e", worst_orth, worst_jac,
                    rt)};
}

} // namespace

int main() {
    run(1, "fixture-reproduction", 1.0, fixture_reproduction);
    run(2, "entropy-linearity", 1.0, entropy_linearity);
    run(3, "noise-robustness", 10.0, noise_robustness);
    run(4, "fbm-scaling-law", 20.0, fbm_scaling_law);
    run(5, "fractal-dimension", 10.0, fractal_dimension);
    run(6, "piecewise-boundaries", 30.0, piecewise_boundaries);
    run(7, "tangent-vs-hurst", 30.0, tangent_vs_hurst_law);
    run(8, "beam-damage-localization", 5.0, beam_damage);
    run(9, "minimal-segmentation", 5.0, minimal_segmentation);
    run(10, "numerical-kernels", 1.0, numerical_kernels);

    if (failures == 0)
        std::printf("all acceptance checks passed\n");
    else
        std::printf("%d acceptance check(s) failed\n", failures);
    return failures;
}
