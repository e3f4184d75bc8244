#pragma once

#include <optional>
#include <string>
#include <vector>

namespace eqsort {

// One polyline on a categorical-x line chart.  Absent values split the line.
struct SvgSeries {
  std::string label;
  std::vector<std::optional<double>> values;
  bool dashed = false;
};

// Deterministic SVG line chart: equally spaced x categories, linear y axis
// starting at 0, legend on the right.  Returns the full SVG document.
std::string render_line_chart(const std::string& title, const std::string& y_label,
                              const std::vector<std::string>& x_labels,
                              const std::vector<SvgSeries>& series);

}  // namespace eqsort
