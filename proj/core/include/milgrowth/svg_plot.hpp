#pragma once

#include "milgrowth/analysis.hpp"

#include <string>
#include <vector>

namespace milgrowth {

struct PlotSeries {
    std::string label;
    std::vector<SweepPoint> points;
};

enum class MarkerStyle { Solid, Dashed, Dotted, DashDot };

/// Vertical reference line at a burden value (calibrated regimes, optima...).
struct PlotMarker {
    std::string label;
    double position = 0.0;
    MarkerStyle style = MarkerStyle::Dotted;
};

struct PlotOptions {
    int width = 800;
    int height = 480;
    std::string title; // empty = no title row
    std::string x_label = "Military burden";
    std::string y_label = "Long-run growth rate";
};

/// Render burden/growth series as a standalone SVG document. Output is a pure
/// function of the inputs: fixed layout, fixed palette, fixed number
/// formatting, so identical inputs give byte-identical documents.
/// Throws ValidationError when no series is given, a series has no points, or
/// a value is not finite. A flat (constant) series renders as a flat line.
std::string render_plot_svg(const std::vector<PlotSeries>& series,
                            const std::vector<PlotMarker>& markers = {},
                            const PlotOptions& options = {});

} // namespace milgrowth
