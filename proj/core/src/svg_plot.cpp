#include "milgrowth/svg_plot.hpp"

#include "milgrowth/csv.hpp"
#include "milgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace milgrowth {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#ff7f0e", "#9467bd", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string px(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

std::string tick_label(double v) {
    // Ticks come from the nice-step grid below, so %.6g never shows noise.
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

const char* dash_array(MarkerStyle style) {
    switch (style) {
        case MarkerStyle::Dashed: return "6,4";
        case MarkerStyle::Dotted: return "2,4";
        case MarkerStyle::DashDot: return "8,4,2,4";
        case MarkerStyle::Solid: break;
    }
    return "";
}

std::string escape_text(const std::string& text) {
    std::string out;
    out.reserve(text.size());
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

std::vector<double> nice_ticks(double lo, double hi, int target) {
    double range = hi - lo;
    double raw_step = range / target;
    double magnitude = std::pow(10.0, std::floor(std::log10(raw_step)));
    double normalized = raw_step / magnitude;
    double step;
    if (normalized <= 1.0) {
        step = magnitude;
    } else if (normalized <= 2.0) {
        step = 2.0 * magnitude;
    } else if (normalized <= 5.0) {
        step = 5.0 * magnitude;
    } else {
        step = 10.0 * magnitude;
    }
    std::vector<double> ticks;
    double first = std::ceil(lo / step) * step;
    for (double v = first; v <= hi + step * 1e-9; v += step) {
        // Snap values that are zero up to rounding so the label prints "0".
        ticks.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
    }
    return ticks;
}

} // namespace

std::string render_plot_svg(const std::vector<PlotSeries>& series,
                            const std::vector<PlotMarker>& markers,
                            const PlotOptions& options) {
    if (series.empty()) {
        throw ValidationError("plot.series", "at least one series is required");
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].points.empty()) {
            throw ValidationError("plot.series[" + std::to_string(i) + "]",
                                  "series has no points");
        }
        for (const auto& point : series[i].points) {
            if (!std::isfinite(point.military_burden) || !std::isfinite(point.growth)) {
                throw ValidationError("plot.series[" + std::to_string(i) + "]",
                                      "series contains a non-finite value");
            }
        }
    }
    for (std::size_t i = 0; i < markers.size(); ++i) {
        if (!std::isfinite(markers[i].position)) {
            throw ValidationError("plot.markers[" + std::to_string(i) + "]",
                                  "marker position must be finite");
        }
    }
    if (options.width < 200 || options.height < 150) {
        throw ValidationError("plot.size", "canvas must be at least 200x150");
    }

    double x_lo = series[0].points[0].military_burden;
    double x_hi = x_lo;
    double y_lo = series[0].points[0].growth;
    double y_hi = y_lo;
    for (const auto& s : series) {
        for (const auto& point : s.points) {
            x_lo = std::min(x_lo, point.military_burden);
            x_hi = std::max(x_hi, point.military_burden);
            y_lo = std::min(y_lo, point.growth);
            y_hi = std::max(y_hi, point.growth);
        }
    }
    for (const auto& marker : markers) {
        x_lo = std::min(x_lo, marker.position);
        x_hi = std::max(x_hi, marker.position);
    }
    if (x_hi == x_lo) {
        double pad = std::max(std::abs(x_lo) * 0.5, 0.01);
        x_lo -= pad;
        x_hi += pad;
    }
    double y_pad = (y_hi - y_lo) * 0.08;
    if (y_pad == 0.0) {
        y_pad = std::max(std::abs(y_lo) * 0.5, 0.01);
    }
    y_lo -= y_pad;
    y_hi += y_pad;

    double margin_left = 72.0;
    double margin_right = 16.0;
    double margin_top = options.title.empty() ? 18.0 : 40.0;
    double margin_bottom = 52.0;
    double plot_w = options.width - margin_left - margin_right;
    double plot_h = options.height - margin_top - margin_bottom;

    auto map_x = [&](double v) {
        return margin_left + (v - x_lo) / (x_hi - x_lo) * plot_w;
    };
    auto map_y = [&](double v) {
        return margin_top + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(options.width) + "\" height=\"" +
           std::to_string(options.height) + "\" viewBox=\"0 0 " +
           std::to_string(options.width) + " " + std::to_string(options.height) +
           "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (!options.title.empty()) {
        svg += "<text x=\"" + px(margin_left + plot_w / 2.0) +
               "\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" "
               "text-anchor=\"middle\">" +
               escape_text(options.title) + "</text>\n";
    }

    // Gridlines and tick labels.
    for (double tick : nice_ticks(y_lo, y_hi, 6)) {
        double y = map_y(tick);
        svg += "<line x1=\"" + px(margin_left) + "\" y1=\"" + px(y) + "\" x2=\"" +
               px(margin_left + plot_w) + "\" y2=\"" + px(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + px(margin_left - 6.0) + "\" y=\"" + px(y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               tick_label(tick) + "</text>\n";
    }
    for (double tick : nice_ticks(x_lo, x_hi, 7)) {
        double x = map_x(tick);
        svg += "<line x1=\"" + px(x) + "\" y1=\"" + px(margin_top + plot_h) +
               "\" x2=\"" + px(x) + "\" y2=\"" + px(margin_top + plot_h + 4.0) +
               "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + px(x) + "\" y=\"" + px(margin_top + plot_h + 18.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               tick_label(tick) + "</text>\n";
    }

    // Zero line when the growth axis crosses it.
    if (y_lo < 0.0 && y_hi > 0.0) {
        double y = map_y(0.0);
        svg += "<line x1=\"" + px(margin_left) + "\" y1=\"" + px(y) + "\" x2=\"" +
               px(margin_left + plot_w) + "\" y2=\"" + px(y) +
               "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }

    // Axes.
    svg += "<line x1=\"" + px(margin_left) + "\" y1=\"" + px(margin_top) + "\" x2=\"" +
           px(margin_left) + "\" y2=\"" + px(margin_top + plot_h) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + px(margin_left) + "\" y1=\"" + px(margin_top + plot_h) +
           "\" x2=\"" + px(margin_left + plot_w) + "\" y2=\"" + px(margin_top + plot_h) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // Markers under the data series.
    for (const auto& marker : markers) {
        double x = map_x(marker.position);
        svg += "<line x1=\"" + px(x) + "\" y1=\"" + px(margin_top) + "\" x2=\"" + px(x) +
               "\" y2=\"" + px(margin_top + plot_h) +
               "\" stroke=\"#555555\" stroke-width=\"1.2\"";
        const char* dashes = dash_array(marker.style);
        if (dashes[0] != '\0') {
            svg += " stroke-dasharray=\"";
            svg += dashes;
            svg += "\"";
        }
        svg += "/>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % kPaletteSize];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t j = 0; j < series[i].points.size(); ++j) {
            if (j > 0) svg += ' ';
            svg += px(map_x(series[i].points[j].military_burden));
            svg += ',';
            svg += px(map_y(series[i].points[j].growth));
        }
        svg += "\"/>\n";
    }

    // Axis labels.
    svg += "<text x=\"" + px(margin_left + plot_w / 2.0) + "\" y=\"" +
           px(options.height - 12.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           escape_text(options.x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + px(margin_top + plot_h / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " +
           px(margin_top + plot_h / 2.0) + ")\">" +
           escape_text(options.y_label) + "</text>\n";

    // Legend: series first, then labelled markers.
    double legend_x = margin_left + plot_w - 180.0;
    double legend_y = margin_top + 14.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].label.empty()) continue;
        svg += "<line x1=\"" + px(legend_x) + "\" y1=\"" + px(legend_y - 4.0) +
               "\" x2=\"" + px(legend_x + 26.0) + "\" y2=\"" + px(legend_y - 4.0) +
               "\" stroke=\"";
        svg += kPalette[i % kPaletteSize];
        svg += "\" stroke-width=\"1.8\"/>\n";
        svg += "<text x=\"" + px(legend_x + 32.0) + "\" y=\"" + px(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape_text(series[i].label) + "</text>\n";
        legend_y += 16.0;
    }
    for (const auto& marker : markers) {
        if (marker.label.empty()) continue;
        svg += "<line x1=\"" + px(legend_x) + "\" y1=\"" + px(legend_y - 4.0) +
               "\" x2=\"" + px(legend_x + 26.0) + "\" y2=\"" + px(legend_y - 4.0) +
               "\" stroke=\"#555555\" stroke-width=\"1.2\"";
        const char* dashes = dash_array(marker.style);
        if (dashes[0] != '\0') {
            svg += " stroke-dasharray=\"";
            svg += dashes;
            svg += "\"";
        }
        svg += "/>\n";
        svg += "<text x=\"" + px(legend_x + 32.0) + "\" y=\"" + px(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape_text(marker.label) + "</text>\n";
        legend_y += 16.0;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace milgrowth
