#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sdalab::tools {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool staircase = false;  // horizontal then vertical between points
};

// Plain line chart with axes and tick labels.
std::string svg_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series);

}  // namespace sdalab::tools
