#pragma once

#include <string>
#include <vector>

namespace gaugelat::cli {

struct ScatterPoint {
  double x = 0;
  double y = 0;
  bool highlight = false;
};

std::string svg_scatter(const std::vector<ScatterPoint>& points, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel);

struct HeatmapPanel {
  std::string title;
  int nx = 0, ny = 0;
  std::vector<double> values;  // ix + nx*iy; NaN cells are left blank
};

// Panels side by side, each with its own colour scale.
std::string svg_heatmaps(const std::vector<HeatmapPanel>& panels, const std::string& title);

}  // namespace gaugelat::cli
