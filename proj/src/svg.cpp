#include "robin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace robin {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

const char* kPalette[] = {"#1f6fb4", "#d1372c", "#3a9e4e", "#8a56b0"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Scale {
    double lo = 0.0, hi = 1.0, px0 = 0.0, px1 = 1.0;
    double operator()(double v) const { return px0 + (v - lo) / (hi - lo) * (px1 - px0); }
};

std::string header() {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  kWidth, kHeight, kWidth, kHeight);
    return std::string(buf) +
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_frame(std::string& svg, const Scale& sx, const Scale& sy, const std::string& title,
                const std::string& x_label, const std::string& y_label) {
    svg += "<g stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n";
    svg += "<line x1=\"" + fmt(sx.px0) + "\" y1=\"" + fmt(sy.px1) + "\" x2=\"" + fmt(sx.px1) +
           "\" y2=\"" + fmt(sy.px1) + "\"/>\n";
    svg += "<line x1=\"" + fmt(sx.px0) + "\" y1=\"" + fmt(sy.px0) + "\" x2=\"" + fmt(sx.px0) +
           "\" y2=\"" + fmt(sy.px1) + "\"/>\n";
    svg += "</g>\n";

    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double vx = sx.lo + (sx.hi - sx.lo) * i / 5.0;
        const double px = sx(vx);
        svg += "<line stroke=\"#333\" x1=\"" + fmt(px) + "\" y1=\"" + fmt(sy.px1) + "\" x2=\"" +
               fmt(px) + "\" y2=\"" + fmt(sy.px1 + 5) + "\"/>\n";
        svg += "<text text-anchor=\"middle\" x=\"" + fmt(px) + "\" y=\"" + fmt(sy.px1 + 20) +
               "\">" + fmt_tick(vx) + "</text>\n";
        const double vy = sy.lo + (sy.hi - sy.lo) * i / 5.0;
        const double py = sy(vy);
        svg += "<line stroke=\"#333\" x1=\"" + fmt(sx.px0 - 5) + "\" y1=\"" + fmt(py) +
               "\" x2=\"" + fmt(sx.px0) + "\" y2=\"" + fmt(py) + "\"/>\n";
        svg += "<text text-anchor=\"end\" x=\"" + fmt(sx.px0 - 8) + "\" y=\"" + fmt(py + 4) +
               "\">" + fmt_tick(vy) + "</text>\n";
    }
    svg += "<text text-anchor=\"middle\" font-size=\"15\" x=\"" + fmt(kWidth / 2) +
           "\" y=\"" + fmt(kTop - 22) + "\">" + escape(title) + "</text>\n";
    svg += "<text text-anchor=\"middle\" x=\"" + fmt(kWidth / 2) + "\" y=\"" +
           fmt(kHeight - 15) + "\">" + escape(x_label) + "</text>\n";
    svg += "<text text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt(kHeight / 2) +
           ")\" x=\"18\" y=\"" + fmt(kHeight / 2) + "\">" + escape(y_label) + "</text>\n";
    svg += "</g>\n";
}

void draw_reference(std::string& svg, const Scale& sx, const Scale& sy, double value) {
    svg += "<line stroke=\"#b00\" stroke-dasharray=\"6 4\" x1=\"" + fmt(sx.px0) + "\" y1=\"" +
           fmt(sy(value)) + "\" x2=\"" + fmt(sx.px1) + "\" y2=\"" + fmt(sy(value)) + "\"/>\n";
}

}  // namespace

std::string render_line_svg(const CurvePlot& plot) {
    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    bool first = true;
    for (const PlotSeries& s : plot.series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double spread = i < s.spread.size() ? s.spread[i] : 0.0;
            if (first) {
                x_lo = x_hi = s.x[i];
                y_lo = s.y[i] - spread;
                y_hi = s.y[i] + spread;
                first = false;
            } else {
                x_lo = std::min(x_lo, s.x[i]);
                x_hi = std::max(x_hi, s.x[i]);
                y_lo = std::min(y_lo, s.y[i] - spread);
                y_hi = std::max(y_hi, s.y[i] + spread);
            }
        }
    }
    if (plot.reference_line) {
        y_lo = std::min(y_lo, *plot.reference_line);
        y_hi = std::max(y_hi, *plot.reference_line);
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    y_lo = std::min(y_lo, 0.0);
    y_hi = std::max(y_hi * 1.05, y_lo + 1e-9);

    const Scale sx{x_lo, x_hi, kLeft, kWidth - kRight};
    const Scale sy{y_lo, y_hi, kHeight - kBottom, kTop};  // inverted via px0 > px1

    std::string svg = header();
    draw_frame(svg, sx, sy, plot.title, plot.x_label, plot.y_label);
    if (plot.reference_line) draw_reference(svg, sx, sy, *plot.reference_line);

    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const PlotSeries& s = plot.series[k];
        const char* color = kPalette[k % 4];
        std::string points;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!points.empty()) points += ' ';
            points += fmt(sx(s.x[i])) + "," + fmt(sy(s.y[i]));
        }
        svg += "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" + std::string(color) +
               "\" points=\"" + points + "\"/>\n";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            svg += "<circle fill=\"" + std::string(color) + "\" r=\"3\" cx=\"" +
                   fmt(sx(s.x[i])) + "\" cy=\"" + fmt(sy(s.y[i])) + "\"/>\n";
            if (i < s.spread.size() && s.spread[i] > 0.0) {
                svg += "<line stroke=\"" + std::string(color) +
                       "\" stroke-width=\"1\" opacity=\"0.6\" x1=\"" + fmt(sx(s.x[i])) +
                       "\" y1=\"" + fmt(sy(s.y[i] - s.spread[i])) + "\" x2=\"" +
                       fmt(sx(s.x[i])) + "\" y2=\"" + fmt(sy(s.y[i] + s.spread[i])) + "\"/>\n";
            }
        }
    }

    // Legend, top-right corner of the plot area.
    svg += "<g font-family=\"sans-serif\" font-size=\"13\">\n";
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const double y = kTop + 8 + 18 * static_cast<double>(k);
        svg += "<line stroke-width=\"3\" stroke=\"" + std::string(kPalette[k % 4]) +
               "\" x1=\"" + fmt(kWidth - kRight - 150) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(kWidth - kRight - 125) + "\" y2=\"" + fmt(y) + "\"/>\n";
        svg += "<text x=\"" + fmt(kWidth - kRight - 118) + "\" y=\"" + fmt(y + 4) + "\">" +
               escape(plot.series[k].name) + "</text>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

std::string render_bar_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& values,
                           double reference_line) {
    const Scale sx{-0.5, static_cast<double>(values.size()) - 0.5, kLeft, kWidth - kRight};
    const Scale sy{0.0, 1.0, kHeight - kBottom, kTop};

    std::string svg = header();
    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    svg += "<text text-anchor=\"middle\" font-size=\"15\" x=\"" + fmt(kWidth / 2) + "\" y=\"" +
           fmt(kTop - 22) + "\">" + escape(title) + "</text>\n";
    svg += "<text text-anchor=\"middle\" x=\"" + fmt(kWidth / 2) + "\" y=\"" +
           fmt(kHeight - 15) + "\">" + escape(x_label) + "</text>\n";
    svg += "<text text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt(kHeight / 2) +
           ")\" x=\"18\" y=\"" + fmt(kHeight / 2) + "\">" + escape(y_label) + "</text>\n";
    for (int i = 0; i <= 5; ++i) {
        const double vy = i / 5.0;
        svg += "<text text-anchor=\"end\" x=\"" + fmt(kLeft - 8) + "\" y=\"" +
               fmt(sy(vy) + 4) + "\">" + fmt_tick(vy) + "</text>\n";
    }
    svg += "</g>\n";
    svg += "<line stroke=\"#333\" x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(sy(0.0)) + "\" x2=\"" +
           fmt(kWidth - kRight) + "\" y2=\"" + fmt(sy(0.0)) + "\"/>\n";

    const double slot = (kWidth - kLeft - kRight) / static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = sx(static_cast<double>(i)) - slot * 0.35;
        const double top = sy(values[i]);
        svg += "<rect fill=\"#1f6fb4\" x=\"" + fmt(x) + "\" y=\"" + fmt(top) + "\" width=\"" +
               fmt(slot * 0.7) + "\" height=\"" + fmt(sy(0.0) - top) + "\"/>\n";
        svg += "<text font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" x=\"" +
               fmt(sx(static_cast<double>(i))) + "\" y=\"" + fmt(sy(0.0) + 16) + "\">" +
               std::to_string(i + 1) + "</text>\n";
    }
    draw_reference(svg, sx, sy, reference_line);
    svg += "</svg>\n";
    return svg;
}

}  // namespace robin
