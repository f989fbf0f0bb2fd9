#pragma once

#include <string>
#include <vector>

namespace fsdb {

struct PlotSeries {
    std::vector<double> x, y;
    std::string colour = "#1f6feb";
};

/// Minimal static SVG line plot: framed axes, ticks, one polyline per
/// series.  Empty series produce an empty-axes plot.
void write_svg_plot(const std::string& path, const std::vector<PlotSeries>& series,
                    const std::string& title, const std::string& x_label,
                    const std::string& y_label);

}  // namespace fsdb
