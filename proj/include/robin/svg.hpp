#ifndef ROBIN_SVG_HPP_
#define ROBIN_SVG_HPP_

#include <optional>
#include <string>
#include <vector>

namespace robin {

/// One plotted curve. spread, when present, draws a vertical +-spread tick at
/// each point (replicate standard deviation).
struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> spread;
};

/// Static two-axis line chart description shared by the CLI plot outputs.
/// Rendering embeds no timestamps, so equal inputs give byte-equal SVG.
struct CurvePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    std::optional<double> reference_line;  // dashed horizontal line (e.g. 0.05)
};

std::string render_line_svg(const CurvePlot& plot);

/// Bar chart for per-component p-values with a dashed significance line.
std::string render_bar_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& values,
                           double reference_line);

}  // namespace robin

#endif  // ROBIN_SVG_HPP_
