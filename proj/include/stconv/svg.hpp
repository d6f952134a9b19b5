#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stconv {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "x";
  std::string y_label;
  bool log_x = false;
  int width = 800;
  int height = 500;
};

/// Standalone SVG line plot, one polyline per series, with axes and a legend.
void write_svg(std::ostream& out, const std::vector<PlotSeries>& series, const PlotOptions& opt);

}  // namespace stconv
