#include "entroseg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace entroseg {

namespace {

constexpr double kW = 640.0, kH = 420.0;
constexpr double kLeft = 62.0, kRight = 608.0, kTop = 42.0, kBottom = 374.0;

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Frame {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;

    void include(double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y))
            return;
        if (fresh) {
            xmin = xmax = x;
            ymin = ymax = y;
            fresh = false;
            return;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }

    void pad() {
        if (fresh) {
            xmin = ymin = 0.0;
            xmax = ymax = 1.0;
        }
        if (xmax <= xmin) {
            xmin -= 1.0;
            xmax += 1.0;
        }
        if (ymax <= ymin) {
            ymin -= 1.0;
            ymax += 1.0;
        }
        const double dx = 0.04 * (xmax - xmin), dy = 0.06 * (ymax - ymin);
        xmin -= dx;
        xmax += dx;
        ymin -= dy;
        ymax += dy;
    }

    double px(double x) const { return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft); }
    double py(double y) const { return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop); }

    bool fresh = true;
};

std::vector<double> ticks(double lo, double hi) {
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / 4.0)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (span / (step * mult) <= 6.0) {
            step *= mult;
            break;
        }
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step)
        out.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    return out;
}

class Canvas {
public:
    Canvas(const std::string& title, const std::string& xlabel, const std::string& ylabel,
           const Frame& frame)
        : frame_(frame) {
        body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\""
              << kH << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
              << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"#ffffff\"/>\n"
              << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" "
                 "font-family=\"sans-serif\" font-size=\"15\" fill=\"#222\">"
              << esc(title) << "</text>\n";
        axes(xlabel, ylabel);
    }

    void polyline(const std::vector<double>& x, const std::vector<double>& y,
                  const std::string& color, double width, const std::string& dash = "") {
        body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
              << '"';
        if (!dash.empty())
            body_ << " stroke-dasharray=\"" << dash << '"';
        body_ << " points=\"";
        for (std::size_t i = 0; i < x.size(); ++i)
            body_ << num(frame_.px(x[i])) << ',' << num(frame_.py(y[i])) << ' ';
        body_ << "\"/>\n";
    }

    void line(double x0, double y0, double x1, double y1, const std::string& color,
              double width, const std::string& dash = "") {
        body_ << "<line x1=\"" << num(frame_.px(x0)) << "\" y1=\"" << num(frame_.py(y0))
              << "\" x2=\"" << num(frame_.px(x1)) << "\" y2=\"" << num(frame_.py(y1))
              << "\" stroke=\"" << color << "\" stroke-width=\"" << width << '"';
        if (!dash.empty())
            body_ << " stroke-dasharray=\"" << dash << '"';
        body_ << "/>\n";
    }

    void dot(double x, double y, double r, const std::string& color, double opacity = 1.0) {
        body_ << "<circle cx=\"" << num(frame_.px(x)) << "\" cy=\"" << num(frame_.py(y))
              << "\" r=\"" << r << "\" fill=\"" << color << "\" fill-opacity=\"" << opacity
              << "\"/>\n";
    }

    void legend(const std::vector<std::pair<std::string, std::string>>& items) {
        double y = kTop + 14.0;
        for (const auto& [color, text] : items) {
            body_ << "<rect x=\"" << kRight - 150 << "\" y=\"" << y - 9
                  << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n"
                  << "<text x=\"" << kRight - 135 << "\" y=\"" << y
                  << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">" << esc(text)
                  << "</text>\n";
            y += 16.0;
        }
    }

    std::string finish() {
        body_ << "</svg>\n";
        return body_.str();
    }

private:
    void axes(const std::string& xlabel, const std::string& ylabel) {
        body_ << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kRight - kLeft
              << "\" height=\"" << kBottom - kTop
              << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
        for (double t : ticks(frame_.xmin, frame_.xmax)) {
            const double p = frame_.px(t);
            if (p < kLeft - 0.5 || p > kRight + 0.5)
                continue;
            body_ << "<line x1=\"" << num(p) << "\" y1=\"" << kTop << "\" x2=\"" << num(p)
                  << "\" y2=\"" << kBottom
                  << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n"
                  << "<text x=\"" << num(p) << "\" y=\"" << kBottom + 16
                  << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
                     "fill=\"#333\">"
                  << num(t) << "</text>\n";
        }
        for (double t : ticks(frame_.ymin, frame_.ymax)) {
            const double p = frame_.py(t);
            if (p < kTop - 0.5 || p > kBottom + 0.5)
                continue;
            body_ << "<line x1=\"" << kLeft << "\" y1=\"" << num(p) << "\" x2=\"" << kRight
                  << "\" y2=\"" << num(p)
                  << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n"
                  << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(p + 4)
                  << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
                     "fill=\"#333\">"
                  << num(t) << "</text>\n";
        }
        body_ << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kH - 8
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
                 "fill=\"#222\">"
              << esc(xlabel) << "</text>\n"
              << "<text x=\"16\" y=\"" << (kTop + kBottom) / 2
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
                 "fill=\"#222\" transform=\"rotate(-90 16 "
              << (kTop + kBottom) / 2 << ")\">" << esc(ylabel) << "</text>\n";
    }

    Frame frame_;
    std::ostringstream body_;
};

const char* kBlue = "#2b6cb0";
const char* kRed = "#c53030";
const char* kGreen = "#2f855a";
const char* kGray = "#999999";

} // namespace

std::string svg_signal_plot(const Signal& s, const std::string& title) {
    Frame f;
    for (std::size_t i = 0; i < s.size(); ++i)
        f.include(s.x[i], s.y[i]);
    f.pad();
    Canvas c(title, "x", "y", f);
    c.polyline(s.x, s.y, kBlue, 1.5);
    return c.finish();
}

std::string svg_segment_plot(const Signal& s, const std::vector<LineSegment>& segments,
                             const std::vector<SegmentLabel>& labels, const std::string& title) {
    Frame f;
    for (std::size_t i = 0; i < s.size(); ++i)
        f.include(s.x[i], s.y[i]);
    f.pad();
    Canvas c(title, "x", "y", f);
    c.polyline(s.x, s.y, kGray, 1.2);
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const LineSegment& sg = segments[i];
        const double x0 = s.x[sg.start_idx], x1 = s.x[sg.end_idx];
        const char* color = labels[i] == SegmentLabel::Singularity ? kRed : kBlue;
        c.line(x0, sg.fit.a * x0 + sg.fit.b, x1, sg.fit.a * x1 + sg.fit.b, color, 2.2);
        c.dot(x1, sg.fit.a * x1 + sg.fit.b, 3.0, color);
    }
    c.legend({{kBlue, "homogeneous"}, {kRed, "singularity"}});
    return c.finish();
}

std::string svg_hough_plot(const std::vector<HoughPoint>& points, const std::string& title) {
    Frame f;
    for (const HoughPoint& p : points)
        f.include(p.position, p.alpha_deg);
    f.pad();
    Canvas c(title, "position", "angle [deg]", f);
    for (const HoughPoint& p : points)
        c.dot(p.position, p.alpha_deg,
              2.0 + 1.5 * std::sqrt(static_cast<double>(p.length_pts)), kBlue, 0.75);
    return c.finish();
}

std::string svg_loglog_plot(const FractalScan& scan, const std::string& title) {
    Frame f;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < scan.scales.size(); ++i) {
        lx.push_back(std::log(static_cast<double>(scan.scales[i])));
        ly.push_back(std::log(scan.counts[i]));
        f.include(lx.back(), ly.back());
    }
    f.pad();
    Canvas c(title, "log scale", "log count", f);
    // the fit lives in log(normalized scale); only a constant offset from
    // log(r), so the slope carries over unchanged
    if (lx.size() >= 2) {
        const double a = scan.log_fit.a;
        c.line(lx.front(), ly.front(), lx.back(), ly.front() + a * (lx.back() - lx.front()),
               kGreen, 1.8, "6 4");
    }
    for (std::size_t i = 0; i < lx.size(); ++i)
        c.dot(lx[i], ly[i], 4.0, kBlue);
    c.legend({{kBlue, "counts"}, {kGreen, "log-log fit"}});
    return c.finish();
}

std::string svg_sweep_plot(const std::vector<SweepRow>& rows, const std::string& title) {
    Frame f;
    std::vector<double> xs, ys;
    for (const SweepRow& r : rows) {
        if (r.found) {
            xs.push_back(r.noise_std);
            ys.push_back(r.optimal_rm2);
            f.include(r.noise_std, r.optimal_rm2);
        }
    }
    f.pad();
    Canvas c(title, "noise std", "optimal threshold", f);
    if (xs.size() > 1)
        c.polyline(xs, ys, kBlue, 1.5);
    for (std::size_t i = 0; i < xs.size(); ++i)
        c.dot(xs[i], ys[i], 4.0, kBlue);
    return c.finish();
}

std::string svg_tangent_plot(const TangentStudy& study, const std::string& title) {
    Frame f;
    for (const TangentSample& s : study.samples)
        f.include(s.hurst, s.tangent);
    f.pad();
    Canvas c(title, "hurst", "dominant tangent", f);
    for (const TangentSample& s : study.samples)
        c.dot(s.hurst, s.tangent, 2.0, kGray, 0.6);
    for (std::size_t i = 0; i < study.hursts.size(); ++i)
        c.dot(study.hursts[i], study.medians[i], 4.5, kRed);
    std::vector<double> cx, cy;
    if (!study.hursts.empty()) {
        const double lo = study.hursts.front(), hi = study.hursts.back();
        for (int i = 0; i <= 100; ++i) {
            const double h = lo + (hi - lo) * i / 100.0;
            cx.push_back(h);
            cy.push_back(study.fit.a * std::exp(study.fit.b * h));
        }
        c.polyline(cx, cy, kGreen, 1.8);
    }
    c.legend({{kGray, "trials"}, {kRed, "medians"}, {kGreen, "exp fit"}});
    return c.finish();
}

std::string svg_beam_plot(const BeamFixture& fixture, const BeamRun& run,
                          const std::string& title) {
    const Signal& s = fixture.signal;
    Frame f;
    for (std::size_t i = 0; i < s.size(); ++i)
        f.include(s.x[i], s.y[i]);
    f.pad();
    Canvas c(title, "station", "normalized deflection", f);
    c.polyline(s.x, s.y, kBlue, 1.5);
    c.line(static_cast<double>(fixture.damage_idx), f.ymin,
           static_cast<double>(fixture.damage_idx), f.ymax, kGray, 1.0, "4 4");
    for (std::size_t i = 0; i < run.segments.size(); ++i) {
        if (run.labels[i] != SegmentLabel::Singularity)
            continue;
        const double x0 = s.x[run.segments[i].start_idx], x1 = s.x[run.segments[i].end_idx];
        c.line(x0, f.ymin, x1, f.ymin, kRed, 5.0);
    }
    c.legend({{kBlue, "mode shape"}, {kRed, "singular zones"}});
    return c.finish();
}

} // namespace entroseg
