#pragma once

#include <string>
#include <vector>

namespace shapevade::chart {

struct Bar {
  std::string label;
  double value = 0.0;
};

// Minimal static SVG output; no styling knobs beyond a title.
void write_bar_chart_svg(const std::vector<Bar>& bars, const std::string& title,
                         const std::string& path);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

void write_line_chart_svg(const std::vector<Series>& series, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::string& path);

}  // namespace shapevade::chart
