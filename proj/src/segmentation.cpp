#include "entroseg/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entroseg {

namespace {

void validate_config(const SegmentationConfig& cfg) {
    if (!(cfg.rm2 > 0.0 && cfg.rm2 <= 1.0))
        throw OutOfDomainError("rm2 must lie in (0, 1]");
    if (cfg.max_lines < 1)
        throw OutOfDomainError("max_lines must be >= 1");
    if (cfg.min_len < 2)
        throw OutOfDomainError("min_len must be >= 2");
}

void validate_signal(const Signal& s) {
    const std::size_t n = s.size();
    if (s.x.size() != s.y.size())
        throw LengthMismatchError("segment: x/y length mismatch");
    if (n < 2)
        throw TooFewPointsError("segment needs at least 2 samples");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
            throw NonFiniteValueError("segment: non-finite sample");
        if (i > 0 && !(s.x[i] > s.x[i - 1]))
            throw NonMonotonicAbscissaError("segment: abscissa must be strictly increasing");
    }
}

std::vector<LineSegment> greedy(const std::vector<double>& x, const std::vector<double>& y,
                                const SegmentationConfig& cfg, DetectionTrace* trace) {
    const std::size_t n = x.size();
    std::vector<LineSegment> segs;
    std::size_t A = 0;
    while (A < n - 1) {
        std::size_t j = n - 1;
        std::size_t fits = 0;
        while (true) {
            const std::size_t len = j - A + 1;
            const LineFit f = ols_line(x.data() + A, y.data() + A, len);
            ++fits;
            if (f.r2 >= cfg.rm2 || f.mean_abs_error == 0.0 || len <= cfg.min_len) {
                segs.push_back(LineSegment{A, j, f});
                if (trace) {
                    trace->entries.push_back(TraceEntry{segs.size() - 1, A, j, fits});
                    trace->total_fits += fits;
                }
                A = j;
                break;
            }
            --j;
        }
        if (segs.size() >= cfg.max_lines && A < n - 1)
            throw TooManyLinesError("line budget exhausted before reaching the end", segs);
    }
    return segs;
}

LineSegment refit(const Signal& s, std::size_t a, std::size_t b) {
    return LineSegment{a, b, ols_line(s.x.data() + a, s.y.data() + a, b - a + 1)};
}

} // namespace

std::vector<std::size_t> refine_change_points(const std::vector<double>& y,
                                              std::vector<std::size_t> bounds,
                                              std::size_t min_len, std::size_t sweeps) {
    if (bounds.size() < 2)
        return bounds;
    if (min_len < 2)
        throw OutOfDomainError("min_len must be >= 2");
    const std::size_t n = y.size();
    std::sort(bounds.begin(), bounds.end());
    if (bounds.front() != 0 || bounds.back() != n - 1)
        throw OutOfDomainError("bounds must span the whole index range");

    // squared first differences, prefix-summed; cs2[i] = sum of g[0..i)
    std::vector<double> cs2(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double g = y[i] - y[i - 1];
        cs2[i] = cs2[i - 1] + g * g;
    }

    // per-window log-variance cost with a relative floor so empty-looking
    // cells cannot swallow the objective
    struct Cost {
        const std::vector<double>* cs2;
        double floor;
        double operator()(std::size_t i, std::size_t j) const {
            if (j <= i)
                return 0.0;
            const double w = static_cast<double>(j - i);
            const double v = ((*cs2)[j] - (*cs2)[i]) / w;
            return w * std::log(std::max(v, floor));
        }
    };
    auto mk = [&cs2](std::size_t L, std::size_t R) {
        const double span = static_cast<double>(std::max<std::size_t>(R - L, 1));
        const double vbar = (cs2[R] - cs2[L]) / span;
        return Cost{&cs2, std::max(vbar, 1e-300) * 1e-4};
    };

    const std::size_t m = bounds.size();
    const std::size_t d = min_len - 1;
    for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
        bool moved = false;
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const std::size_t L = bounds[i - 1], R = bounds[i + 1];
            const Cost cost = mk(L, R);
            std::size_t bb = bounds[i];
            double bv = cost(L, bb) + cost(bb, R);
            for (std::size_t b = L + d; b + d <= R; ++b) {
                const double v = cost(L, b) + cost(b, R);
                if (v < bv - 1e-12) {
                    bv = v;
                    bb = b;
                }
            }
            if (bb != bounds[i]) {
                bounds[i] = bb;
                moved = true;
            }
        }
        for (std::size_t i = 1; i + 2 < m; ++i) {
            const std::size_t L = bounds[i - 1], R = bounds[i + 2];
            const Cost cost = mk(L, R);
            std::size_t b1b = bounds[i], b2b = bounds[i + 1];
            double bv = cost(L, b1b) + cost(b1b, b2b) + cost(b2b, R);
            for (std::size_t b1 = L + d; b1 + 2 * d <= R; ++b1) {
                const double c1 = cost(L, b1);
                for (std::size_t b2 = b1 + d; b2 + d <= R; ++b2) {
                    const double v = c1 + cost(b1, b2) + cost(b2, R);
                    if (v < bv - 1e-12) {
                        bv = v;
                        b1b = b1;
                        b2b = b2;
                    }
                }
            }
            if (b1b != bounds[i] || b2b != bounds[i + 1]) {
                bounds[i] = b1b;
                bounds[i + 1] = b2b;
                moved = true;
            }
        }
        if (!moved)
            break;
    }
    return bounds;
}

std::vector<LineSegment> segment(const Signal& s, const SegmentationConfig& cfg,
                                 DetectionTrace* trace) {
    validate_config(cfg);
    validate_signal(s);
    const std::size_t n = s.size();

    std::vector<LineSegment> segs;
    if (!cfg.from_right) {
        segs = greedy(s.x, s.y, cfg, trace);
    } else {
        // run the same walk on the reversed signal, then refit each window in
        // the original orientation so slopes come out in original coordinates
        std::vector<double> xr(n), yr(n);
        for (std::size_t i = 0; i < n; ++i) {
            xr[i] = -s.x[n - 1 - i];
            yr[i] = s.y[n - 1 - i];
        }
        DetectionTrace rev_trace;
        std::vector<LineSegment> rev;
        try {
            rev = greedy(xr, yr, cfg, trace ? &rev_trace : nullptr);
        } catch (const TooManyLinesError& e) {
            std::vector<LineSegment> mapped;
            mapped.reserve(e.partial.size());
            for (auto it = e.partial.rbegin(); it != e.partial.rend(); ++it)
                mapped.push_back(refit(s, n - 1 - it->end_idx, n - 1 - it->start_idx));
            throw TooManyLinesError(e.what(), std::move(mapped));
        }
        segs.reserve(rev.size());
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            segs.push_back(refit(s, n - 1 - it->end_idx, n - 1 - it->start_idx));
        if (trace) {
            for (auto it = rev_trace.entries.rbegin(); it != rev_trace.entries.rend(); ++it) {
                trace->entries.push_back(TraceEntry{trace->entries.size(),
                                                    n - 1 - it->end_idx,
                                                    n - 1 - it->start_idx, it->fits});
                trace->total_fits += it->fits;
            }
        }
    }

    if (cfg.refine_boundaries && segs.size() > 1) {
        std::vector<std::size_t> bounds;
        bounds.reserve(segs.size() + 1);
        for (const LineSegment& sg : segs)
            bounds.push_back(sg.start_idx);
        bounds.push_back(segs.back().end_idx);
        bounds = refine_change_points(s.y, std::move(bounds), cfg.min_len);
        std::vector<LineSegment> refined;
        refined.reserve(segs.size());
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            refined.push_back(refit(s, bounds[i], bounds[i + 1]));
        segs = std::move(refined);
    }
    return segs;
}

std::vector<SegmentLabel> classify(const std::vector<LineSegment>& segments, double short_frac) {
    if (!(short_frac > 0.0) || !std::isfinite(short_frac))
        throw OutOfDomainError("short_frac must be positive");
    std::vector<SegmentLabel> labels;
    if (segments.empty())
        return labels;

    std::vector<double> lens;
    lens.reserve(segments.size());
    for (const LineSegment& sg : segments)
        lens.push_back(static_cast<double>(sg.length_pts()));
    std::vector<double> sorted = lens;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    const double median = m % 2 == 1 ? sorted[m / 2]
                                     : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);

    labels.reserve(m);
    for (double L : lens)
        labels.push_back(L < short_frac * median || L <= 2.0 ? SegmentLabel::Singularity
                                                             : SegmentLabel::Homogeneous);
    return labels;
}

std::vector<HoughPoint> to_hough(const Signal& s, const std::vector<LineSegment>& segments) {
    std::vector<HoughPoint> pts;
    pts.reserve(segments.size());
    for (const LineSegment& sg : segments) {
        if (sg.end_idx >= s.size())
            throw OutOfDomainError("segment index outside signal");
        HoughPoint p;
        p.position = s.x[sg.end_idx];
        p.length_pts = sg.length_pts();
        p.alpha_deg = std::atan(sg.fit.a) * 180.0 / 3.14159265358979323846;
        p.intercept = sg.fit.b;
        p.mean_abs_error = sg.fit.mean_abs_error;
        pts.push_back(p);
    }
    return pts;
}

} // namespace entroseg
