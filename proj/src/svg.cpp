#include "gripsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gripsim {

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 200.0, kTop = 45.0, kBottom = 55.0;
constexpr int kTicks = 5;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string num(double v, const char* fmt = "%.2f") {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

} // namespace

std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<PlotSeries>& series,
                          double y_min, double y_max) {
    double x_lo = 0.0, x_hi = 1.0;
    bool any = false;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!any) {
                x_lo = x_hi = x;
                any = true;
            } else {
                x_lo = std::min(x_lo, x);
                x_hi = std::max(x_hi, x);
            }
        }
    }
    if (y_min == y_max) { // autoscale
        bool seen = false;
        for (const PlotSeries& s : series)
            for (const auto& [x, y] : s.points) {
                (void)x;
                if (!seen) {
                    y_min = y_max = y;
                    seen = true;
                } else {
                    y_min = std::min(y_min, y);
                    y_max = std::max(y_max, y);
                }
            }
        if (!seen) {
            y_min = 0.0;
            y_max = 1.0;
        }
    }
    if (x_hi - x_lo < 1e-12) x_hi = x_lo + 1.0;
    if (y_max - y_min < 1e-12) y_max = y_min + 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto sy = [&](double y) { return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    out << "<!-- gripsim plot v1 -->\n";
    out << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    out << "<text x=\"" << num(kLeft + plot_w / 2.0) << "\" y=\"24\" font-size=\"16\" "
           "font-family=\"sans-serif\" text-anchor=\"middle\">"
        << escape(title) << "</text>\n";

    // frame, grid lines and tick labels
    out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
        << num(plot_w) << "\" height=\"" << num(plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / kTicks;
        const double fy = y_min + (y_max - y_min) * i / kTicks;
        const double px = sx(fx), py = sy(fy);
        if (i > 0 && i < kTicks) {
            out << "<line x1=\"" << num(px) << "\" y1=\"" << num(kTop) << "\" x2=\""
                << num(px) << "\" y2=\"" << num(kTop + plot_h)
                << "\" stroke=\"#dddddd\"/>\n";
            out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py) << "\" x2=\""
                << num(kLeft + plot_w) << "\" y2=\"" << num(py)
                << "\" stroke=\"#dddddd\"/>\n";
        }
        out << "<text x=\"" << num(px) << "\" y=\"" << num(kTop + plot_h + 18.0)
            << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">"
            << num(fx, "%g") << "</text>\n";
        out << "<text x=\"" << num(kLeft - 8.0) << "\" y=\"" << num(py + 4.0)
            << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"end\">"
            << num(fy, "%g") << "</text>\n";
    }
    out << "<text x=\"" << num(kLeft + plot_w / 2.0) << "\" y=\"" << num(kHeight - 12.0)
        << "\" font-size=\"13\" font-family=\"sans-serif\" text-anchor=\"middle\">"
        << escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << num(kTop + plot_h / 2.0)
        << "\" font-size=\"13\" font-family=\"sans-serif\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 "
        << num(kTop + plot_h / 2.0) << ")\">" << escape(y_label) << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % kPaletteSize];
        const PlotSeries& s = series[si];
        if (!s.points.empty()) {
            out << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            bool first = true;
            for (const auto& [x, y] : s.points) {
                if (!first) out << ' ';
                first = false;
                out << num(sx(x)) << ',' << num(sy(y));
            }
            out << "\"/>\n";
            for (const auto& [x, y] : s.points)
                out << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y))
                    << "\" r=\"2.2\" fill=\"" << color << "\"/>\n";
        }
        const double ly = kTop + 14.0 + 16.0 * static_cast<double>(si);
        out << "<line x1=\"" << num(kWidth - kRight + 14.0) << "\" y1=\"" << num(ly - 4.0)
            << "\" x2=\"" << num(kWidth - kRight + 38.0) << "\" y2=\"" << num(ly - 4.0)
            << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        out << "<text x=\"" << num(kWidth - kRight + 44.0) << "\" y=\"" << num(ly)
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << escape(s.label)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace gripsim
