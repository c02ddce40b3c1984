#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hurstlab::cli {

struct PlotCurve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool scatter = false;
};

struct PlotAxes {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
};

/// Self-contained SVG line/scatter chart.
std::string render_svg(const std::vector<PlotCurve>& curves, const PlotAxes& axes);

/// Two-column whitespace-separated data file with a commented header.
void write_plot_data(const std::filesystem::path& path, const std::string& x_name,
                     const std::string& y_name, const std::vector<std::string>& x,
                     const std::vector<double>& y);

}  // namespace hurstlab::cli
