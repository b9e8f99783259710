#include "chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "config.hpp"

namespace zeno::cli {

namespace {

constexpr int kPanelWidth = 440;
constexpr int kPanelHeight = 340;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 48;

std::string short_number(double value) {
    if (std::isnan(value)) return "nan";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6g", value);
    return buffer;
}

std::string coordinate(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
    bool any = false;
};

Range finite_range(const std::vector<double>& values) {
    Range range;
    range.lo = std::numeric_limits<double>::infinity();
    range.hi = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (!std::isfinite(v)) continue;
        range.lo = std::min(range.lo, v);
        range.hi = std::max(range.hi, v);
        range.any = true;
    }
    if (!range.any) {
        range.lo = 0.0;
        range.hi = 1.0;
        return range;
    }
    if (range.hi == range.lo) {
        const double pad = std::max(0.5, std::abs(range.lo) * 0.1);
        range.lo -= pad;
        range.hi += pad;
    } else {
        const double pad = (range.hi - range.lo) * 0.05;
        range.lo -= pad;
        range.hi += pad;
    }
    return range;
}

void render_panel(std::ostream& out, const ChartPanel& panel, int x_offset) {
    const double plot_left = x_offset + kMarginLeft;
    const double plot_right = x_offset + kPanelWidth - kMarginRight;
    const double plot_top = kMarginTop;
    const double plot_bottom = kPanelHeight - kMarginBottom;

    const Range xr = finite_range(panel.x);
    const Range yr = finite_range(panel.y);
    const auto map_x = [&](double v) {
        return plot_left + (v - xr.lo) / (xr.hi - xr.lo) * (plot_right - plot_left);
    };
    const auto map_y = [&](double v) {
        return plot_bottom - (v - yr.lo) / (yr.hi - yr.lo) * (plot_bottom - plot_top);
    };

    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<text x=\"" << coordinate(x_offset + kPanelWidth / 2.0) << "\" y=\"20\""
        << " text-anchor=\"middle\" font-size=\"14\">" << panel.title
        << "</text>\n";
    // Axes.
    out << "<line x1=\"" << coordinate(plot_left) << "\" y1=\""
        << coordinate(plot_bottom) << "\" x2=\"" << coordinate(plot_right)
        << "\" y2=\"" << coordinate(plot_bottom)
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << coordinate(plot_left) << "\" y1=\""
        << coordinate(plot_top) << "\" x2=\"" << coordinate(plot_left)
        << "\" y2=\"" << coordinate(plot_bottom)
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    // Tick labels: extremes of each axis.
    out << "<text x=\"" << coordinate(plot_left) << "\" y=\""
        << coordinate(plot_bottom + 16) << "\" text-anchor=\"middle\">"
        << short_number(xr.lo) << "</text>\n";
    out << "<text x=\"" << coordinate(plot_right) << "\" y=\""
        << coordinate(plot_bottom + 16) << "\" text-anchor=\"middle\">"
        << short_number(xr.hi) << "</text>\n";
    out << "<text x=\"" << coordinate(plot_left - 6) << "\" y=\""
        << coordinate(plot_bottom + 4) << "\" text-anchor=\"end\">"
        << short_number(yr.lo) << "</text>\n";
    out << "<text x=\"" << coordinate(plot_left - 6) << "\" y=\""
        << coordinate(plot_top + 4) << "\" text-anchor=\"end\">"
        << short_number(yr.hi) << "</text>\n";
    // Axis labels.
    out << "<text x=\"" << coordinate((plot_left + plot_right) / 2.0) << "\" y=\""
        << coordinate(kPanelHeight - 12) << "\" text-anchor=\"middle\">"
        << panel.x_label << "</text>\n";
    out << "<text x=\"" << coordinate(x_offset + 16) << "\" y=\""
        << coordinate((plot_top + plot_bottom) / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 "
        << coordinate(x_offset + 16) << " "
        << coordinate((plot_top + plot_bottom) / 2.0) << ")\">" << panel.y_label
        << "</text>\n";

    // Data polyline; undefined points are dropped.
    std::ostringstream points;
    std::size_t plotted = 0;
    const std::size_t count = std::min(panel.x.size(), panel.y.size());
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::isfinite(panel.x[i]) || !std::isfinite(panel.y[i])) continue;
        points << coordinate(map_x(panel.x[i])) << ','
               << coordinate(map_y(panel.y[i])) << ' ';
        ++plotted;
    }
    if (plotted >= 2) {
        out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\""
            << " points=\"" << points.str() << "\"/>\n";
    } else if (plotted == 1) {
        out << "<circle r=\"3\" fill=\"#1f6fb2\" cx=\""
            << points.str().substr(0, points.str().find(','))
            << "\" cy=\""
            << points.str().substr(points.str().find(',') + 1,
                                   points.str().find(' ') -
                                       points.str().find(',') - 1)
            << "\"/>\n";
    } else {
        out << "<text x=\"" << coordinate((plot_left + plot_right) / 2.0)
            << "\" y=\"" << coordinate((plot_top + plot_bottom) / 2.0)
            << "\" text-anchor=\"middle\">no finite data</text>\n";
    }
    out << "</g>\n";
}

}  // namespace

void write_chart(const std::string& path, const std::vector<ChartPanel>& panels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError(0, "cannot create plot file '" + path + "'");
    const int width = kPanelWidth * static_cast<int>(panels.size());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << kPanelHeight << "\" viewBox=\"0 0 " << width << ' '
        << kPanelHeight << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << kPanelHeight
        << "\" fill=\"#ffffff\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i)
        render_panel(out, panels[i], static_cast<int>(i) * kPanelWidth);
    out << "</svg>\n";
}

}  // namespace zeno::cli
