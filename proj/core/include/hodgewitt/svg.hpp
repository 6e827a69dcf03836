#pragma once

#include <optional>
#include <string>

#include "hodgewitt/polygon.hpp"

namespace hodgewitt {

struct PolygonPlot {
  std::string title;
  Polygon newton;
  Polygon slope_number;
  std::optional<Polygon> hodge;  // omitted when the profile has no Hodge table
};

// Renders the polygons into one 800x600 SVG document: Newton solid,
// slope-number dashed, Hodge dotted, one polyline element each, plus axes
// and a legend. Break points stay rational until the final coordinate
// formatting.
std::string polygon_svg(const PolygonPlot& plot);

}  // namespace hodgewitt
