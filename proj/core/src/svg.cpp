#include "hodgewitt/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace hodgewitt {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 70;  // leaves room for title and legend
constexpr int kMarginBottom = 50;

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string format_number(const Rational& value) {
  double v = value.num().convert_to<double>() / value.den().convert_to<double>();
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

struct Series {
  const Polygon* polygon;
  const char* label;
  const char* color;
  const char* dash;  // nullptr for a solid stroke
};

}  // namespace

std::string polygon_svg(const PolygonPlot& plot) {
  std::vector<Series> series;
  series.push_back({&plot.newton, "Newton", "#111827", nullptr});
  series.push_back({&plot.slope_number, "slope numbers", "#2563eb", "10 5"});
  if (plot.hodge) {
    series.push_back({&*plot.hodge, "Hodge", "#dc2626", "2 4"});
  }

  Rational max_x = 0;
  Rational min_y = 0;
  Rational max_y = 0;
  for (const Series& s : series) {
    for (const PolygonPoint& p : s.polygon->break_points()) {
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const Rational span_x = max_x.is_zero() ? Rational(1) : max_x;
  const Rational span_y = (max_y - min_y).is_zero() ? Rational(1) : max_y - min_y;
  const Rational scale_x = Rational(kWidth - kMarginLeft - kMarginRight) / span_x;
  const Rational scale_y = Rational(kHeight - kMarginTop - kMarginBottom) / span_y;

  auto map_x = [&](const Rational& x) { return Rational(kMarginLeft) + x * scale_x; };
  auto map_y = [&](const Rational& y) {
    return Rational(kHeight - kMarginBottom) - (y - min_y) * scale_y;
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
         "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
         std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(kWidth) + "\" height=\"" +
         std::to_string(kHeight) + "\" fill=\"#ffffff\"/>\n";
  out += "  <text x=\"" + std::to_string(kMarginLeft) +
         "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#111827\">" +
         escape_xml(plot.title) + "</text>\n";

  // axes
  const std::string x0 = format_number(map_x(0));
  const std::string y0 = format_number(map_y(min_y));
  const std::string x1 = format_number(map_x(max_x.is_zero() ? span_x : max_x));
  const std::string y1 = format_number(map_y(min_y + span_y));
  out += "  <line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 +
         "\" stroke=\"#9ca3af\" stroke-width=\"1\"/>\n";
  out += "  <line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 +
         "\" stroke=\"#9ca3af\" stroke-width=\"1\"/>\n";
  out += "  <text x=\"" + x1 + "\" y=\"" + format_number(map_y(min_y) + Rational(30)) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#6b7280\" "
         "text-anchor=\"end\">x = " +
         max_x.str() + "</text>\n";
  out += "  <text x=\"" + format_number(map_x(0) - Rational(10)) + "\" y=\"" + y1 +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#6b7280\" "
         "text-anchor=\"end\">y = " +
         (min_y + span_y).str() + "</text>\n";

  // legend
  int legend_x = kMarginLeft;
  for (const Series& s : series) {
    std::string lx0 = std::to_string(legend_x);
    std::string lx1 = std::to_string(legend_x + 34);
    out += "  <line x1=\"" + lx0 + "\" y1=\"48\" x2=\"" + lx1 +
           "\" y2=\"48\" stroke=\"" + s.color + "\" stroke-width=\"2\"";
    if (s.dash) out += " stroke-dasharray=\"" + std::string(s.dash) + "\"";
    out += "/>\n";
    out += "  <text x=\"" + std::to_string(legend_x + 40) +
           "\" y=\"52\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#111827\">" +
           escape_xml(s.label) + "</text>\n";
    legend_x += 40 + 9 * static_cast<int>(std::string(s.label).size()) + 24;
  }

  for (const Series& s : series) {
    out += "  <polyline fill=\"none\" stroke=\"" + std::string(s.color) +
           "\" stroke-width=\"2.5\"";
    if (s.dash) out += " stroke-dasharray=\"" + std::string(s.dash) + "\"";
    out += " points=\"";
    bool first = true;
    for (const PolygonPoint& p : s.polygon->break_points()) {
      if (!first) out += " ";
      first = false;
      out += format_number(map_x(p.x)) + "," + format_number(map_y(p.y));
    }
    out += "\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace hodgewitt
