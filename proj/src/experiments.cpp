#include "entroseg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "entroseg/entropy.hpp"
#include "entroseg/rng.hpp"

namespace entroseg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double median_of(std::vector<double> v) {
    if (v.empty())
        return kNaN;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

} // namespace

std::vector<SweepRow> noise_sweep(const Signal& base, const SweepConfig& cfg) {
    if (cfg.noise_stds.empty() || cfg.rm2_grid.empty())
        throw EmptyInputError("sweep needs noise levels and a threshold grid");
    if (cfg.trials < 1)
        throw OutOfDomainError("trials must be >= 1");
    for (double std_ : cfg.noise_stds)
        if (!(std_ >= 0.0) || !std::isfinite(std_))
            throw OutOfDomainError("noise std must be finite and >= 0");

    std::vector<double> grid = cfg.rm2_grid;
    std::sort(grid.begin(), grid.end());

    std::vector<SweepRow> rows;
    for (std::size_t si = 0; si < cfg.noise_stds.size(); ++si) {
        const double std_ = cfg.noise_stds[si];

        // one noise draw per trial, shared by every threshold in the grid
        std::vector<std::vector<double>> noisy(cfg.trials);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            noisy[t] = base.y;
            if (std_ > 0.0) {
                Rng rng = Rng::substream(cfg.seed, si * 1000000ull + t);
                for (double& v : noisy[t])
                    v += rng.gauss(0.0, std_);
            }
        }

        SweepRow row;
        row.noise_std = std_;
        row.optimal_rm2 = kNaN;
        row.max_slope_err = kNaN;

        SegmentationConfig scfg;
        scfg.max_lines = cfg.max_lines;
        scfg.min_len = cfg.min_len;

        for (double rm2 : grid) {
            scfg.rm2 = rm2;
            std::size_t ok = 0;
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                try {
                    Signal s{base.x, noisy[t]};
                    if (segment(s, scfg).size() == cfg.target_lines)
                        ++ok;
                } catch (const Error&) {
                }
            }
            const double rate = static_cast<double>(ok) / static_cast<double>(cfg.trials);
            if (rate >= cfg.rate_threshold) {
                row.found = true;
                row.optimal_rm2 = rm2; // grid is ascending, so the last hit is largest
                row.success_rate = rate;
            }
        }

        if (row.found) {
            scfg.rm2 = row.optimal_rm2;

            std::map<std::size_t, std::size_t> counts;
            std::vector<std::vector<LineSegment>> qualifying;
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                try {
                    Signal s{base.x, noisy[t]};
                    const std::vector<LineSegment> segs = segment(s, scfg);
                    ++counts[segs.size()];
                    if (segs.size() == cfg.target_lines)
                        qualifying.push_back(segs);
                } catch (const Error&) {
                }
            }
            std::size_t mode = 0, mode_count = 0;
            for (const auto& [k, c] : counts) {
                if (c > mode_count) {
                    mode = k;
                    mode_count = c;
                }
            }
            row.lines_found = mode;

            // drift of the longest clean lines under noise, matched by order
            try {
                const std::vector<LineSegment> clean = segment(base, scfg);
                if (clean.size() == cfg.target_lines && !qualifying.empty()) {
                    std::vector<std::size_t> order(clean.size());
                    for (std::size_t i = 0; i < order.size(); ++i)
                        order[i] = i;
                    std::sort(order.begin(), order.end(), [&clean](std::size_t a, std::size_t b) {
                        const std::size_t la = clean[a].length_pts(), lb = clean[b].length_pts();
                        return la != lb ? la > lb : a < b;
                    });
                    order.resize(std::min<std::size_t>(order.size(), 3));
                    double worst = 0.0;
                    for (const std::vector<LineSegment>& segs : qualifying)
                        for (std::size_t k : order)
                            worst = std::max(worst, std::abs(segs[k].fit.a - clean[k].fit.a));
                    row.max_slope_err = worst;
                }
            } catch (const Error&) {
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

TangentStudy tangent_vs_hurst(const TangentConfig& cfg) {
    if (cfg.hursts.empty())
        throw EmptyInputError("no hurst values given");
    if (cfg.trials < 1)
        throw OutOfDomainError("trials must be >= 1");
    if (cfg.block < 8)
        throw OutOfDomainError("block must be >= 8");

    TangentStudy study;
    study.hursts = cfg.hursts;

    SegmentationConfig scfg;
    scfg.rm2 = cfg.rm2;

    std::uint64_t k = 0;
    for (double hurst : cfg.hursts) {
        std::vector<double> slopes;
        slopes.reserve(cfg.trials);
        for (std::size_t t = 0; t < cfg.trials; ++t, ++k) {
            FbmSpec spec;
            spec.hurst = hurst;
            spec.n = cfg.block;
            spec.normalization = Normalization::UnitInterval;
            Rng rng = Rng::substream(cfg.seed, k);
            const std::vector<double> path = gen_fbm(spec, rng);

            const Signal h = entropy_transform(make_index_signal(path)).as_signal();
            const std::vector<LineSegment> segs = segment(h, scfg);
            const auto dominant =
                std::max_element(segs.begin(), segs.end(),
                                 [](const LineSegment& a, const LineSegment& b) {
                                     return a.length_pts() < b.length_pts();
                                 });
            slopes.push_back(dominant->fit.a);
            study.samples.push_back(TangentSample{hurst, dominant->fit.a});
        }
        study.medians.push_back(median_of(slopes));
    }

    // a single hurst level cannot pin both exponential parameters
    if (cfg.hursts.size() >= 2) {
        std::vector<double> hs, ts;
        hs.reserve(study.samples.size());
        ts.reserve(study.samples.size());
        for (const TangentSample& s : study.samples) {
            hs.push_back(s.hurst);
            ts.push_back(s.tangent);
        }
        study.fit = fit_exponential(hs, ts);
    }
    return study;
}

std::vector<double> clamped_free_mode(std::size_t n) {
    if (n < 8)
        throw OutOfDomainError("mode shape needs at least 8 stations");
    // first root of cosh(b)cos(b) = -1 and its mode-shape mixing factor
    const double beta = 1.8751040687119611;
    const double alpha = (std::cosh(beta) + std::cos(beta)) / (std::sinh(beta) + std::sin(beta));
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = static_cast<double>(i) / static_cast<double>(n - 1);
        y[i] = std::cosh(beta * xi) - std::cos(beta * xi) -
               alpha * (std::sinh(beta * xi) - std::sin(beta * xi));
    }
    const double tip = std::abs(y[n - 1]);
    for (double& v : y)
        v /= tip;
    return y;
}

BeamFixture make_beam_fixture(double severity, std::optional<std::uint64_t> seed,
                              double noise_std, std::size_t n, std::size_t damage_idx) {
    if (!(severity >= 0.0) || !std::isfinite(severity))
        throw OutOfDomainError("severity must be finite and >= 0");
    if (!(noise_std >= 0.0) || !std::isfinite(noise_std))
        throw OutOfDomainError("noise std must be finite and >= 0");
    if (damage_idx < 1 || damage_idx >= n - 1)
        throw OutOfDomainError("damage station must be interior");

    std::vector<double> y = clamped_free_mode(n);
    if (severity > 0.0) {
        // offset one station by severity times the local slope over a unit span
        const double local_slope =
            (y[damage_idx + 1] - y[damage_idx - 1]) * static_cast<double>(n - 1) / 2.0;
        y[damage_idx] += severity * local_slope;
    }

    BeamFixture fx;
    fx.damage_idx = damage_idx;
    fx.severity = severity;
    fx.signal = make_index_signal(y);
    if (seed) {
        fx.noise_std = noise_std;
        fx.signal = add_gaussian_noise(fx.signal, noise_std, *seed);
    }
    return fx;
}

BeamRun run_beam_study(const BeamFixture& fixture, double rm2, double short_frac,
                       std::size_t min_len) {
    const std::size_t n = fixture.signal.size();
    const Signal h = entropy_transform(fixture.signal).as_signal();

    SegmentationConfig scfg;
    scfg.rm2 = rm2;
    scfg.min_len = min_len;

    BeamRun run;
    run.segments = segment(h, scfg);
    run.labels = classify(run.segments, short_frac);

    const double k = static_cast<double>(fixture.damage_idx);
    double nearest = kNaN;
    const std::size_t band_lo = n / 4, band_hi = 3 * n / 4 - 1;
    for (std::size_t i = 0; i < run.segments.size(); ++i) {
        if (run.labels[i] != SegmentLabel::Singularity)
            continue;
        const double a = static_cast<double>(run.segments[i].start_idx);
        const double b = static_cast<double>(run.segments[i].end_idx);
        const double d = std::min(std::abs(a - k), std::abs(b - k));
        if (std::isnan(nearest) || d < nearest)
            nearest = d;
        if (run.segments[i].start_idx >= band_lo && run.segments[i].end_idx <= band_hi)
            ++run.interior_singularities;
    }
    run.nearest_singularity_dist = nearest;

    std::vector<double> before, after;
    for (const LineSegment& sg : run.segments) {
        if (sg.end_idx <= fixture.damage_idx)
            before.push_back(static_cast<double>(sg.length_pts()));
        if (sg.start_idx >= fixture.damage_idx)
            after.push_back(static_cast<double>(sg.length_pts()));
    }
    run.median_len_before = median_of(std::move(before));
    run.median_len_after = median_of(std::move(after));
    return run;
}

} // namespace entroseg
