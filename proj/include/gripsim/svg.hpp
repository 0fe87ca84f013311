#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gripsim {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points; // (x, y)
};

// Self-contained 640x480 line plot with axes, ticks and a legend. Output is a
// pure function of the inputs (fixed palette, fixed number formatting), so
// reruns produce byte-identical files. Pass y_min == y_max to autoscale the
// y axis; x always autoscales.
std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<PlotSeries>& series,
                          double y_min = 0.0, double y_max = 0.0);

} // namespace gripsim
