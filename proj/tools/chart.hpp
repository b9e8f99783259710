// Minimal hand-emitted SVG line charts: two panels side by side, each with
// axes, min/max tick labels, and a single polyline.  No dependencies.

#ifndef ZENO_CLI_CHART_HPP
#define ZENO_CLI_CHART_HPP

#include <string>
#include <vector>

namespace zeno::cli {

struct ChartPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<double> y;  // NaN entries are skipped
};

// Renders the panels into one SVG document and writes it to `path`.
void write_chart(const std::string& path, const std::vector<ChartPanel>& panels);

}  // namespace zeno::cli

#endif  // ZENO_CLI_CHART_HPP
