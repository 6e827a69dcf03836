#include "hodgewitt/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hodgewitt {

namespace {

Rational segment_slope(const PolygonPoint& a, const PolygonPoint& b) {
  return (b.y - a.y) / (b.x - a.x);
}

}  // namespace

Polygon Polygon::from_break_points(std::vector<PolygonPoint> points) {
  if (points.empty()) throw std::invalid_argument("Polygon: empty break-point list");
  if (!(points.front().x == Rational(0) && points.front().y == Rational(0))) {
    throw std::invalid_argument("Polygon: must start at (0,0)");
  }
  for (size_t k = 1; k < points.size(); ++k) {
    if (!(points[k - 1].x < points[k].x)) {
      throw std::invalid_argument("Polygon: x-coordinates must be strictly increasing");
    }
  }
  for (size_t k = 2; k < points.size(); ++k) {
    if (segment_slope(points[k - 2], points[k - 1]) > segment_slope(points[k - 1], points[k])) {
      throw std::invalid_argument("Polygon: segment slopes must be non-decreasing");
    }
  }
  return Polygon(std::move(points));
}

Polygon Polygon::from_slope_multiset(const std::vector<std::pair<Rational, Int>>& segments) {
  std::map<Rational, Int> merged;
  for (const auto& [slope, mult] : segments) {
    if (mult < 1) {
      throw std::invalid_argument("Polygon: non-positive multiplicity for slope " + slope.str());
    }
    merged[slope] += mult;
  }
  std::vector<PolygonPoint> points;
  points.push_back({Rational(0), Rational(0)});
  Rational x(0);
  Rational y(0);
  for (const auto& [slope, mult] : merged) {
    x += Rational(mult);
    y += slope * Rational(mult);
    points.push_back({x, y});
  }
  return Polygon(std::move(points));
}

Rational Polygon::value_at(const Rational& x) const {
  if (x < Rational(0) || x > x_max()) {
    throw std::out_of_range("Polygon: x = " + x.str() + " outside [0, " + x_max().str() + "]");
  }
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const PolygonPoint& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  const PolygonPoint& hi = *it;
  const PolygonPoint& lo = *std::prev(it);
  return lo.y + (x - lo.x) * segment_slope(lo, hi);
}

Polygon Polygon::normalized() const {
  if (points_.size() < 3) return *this;
  std::vector<PolygonPoint> out;
  out.push_back(points_.front());
  for (size_t k = 1; k + 1 < points_.size(); ++k) {
    if (segment_slope(out.back(), points_[k]) == segment_slope(points_[k], points_[k + 1])) {
      continue;  // collinear interior point
    }
    out.push_back(points_[k]);
  }
  out.push_back(points_.back());
  return Polygon(std::move(out));
}

bool lies_on_or_above(const Polygon& upper, const Polygon& lower) {
  if (!(upper.x_max() == lower.x_max())) {
    throw std::invalid_argument("lies_on_or_above: polygons have different total lengths (" +
                                upper.x_max().str() + " vs " + lower.x_max().str() + ")");
  }
  std::set<Rational> xs;
  for (const auto& p : upper.break_points()) xs.insert(p.x);
  for (const auto& p : lower.break_points()) xs.insert(p.x);
  for (const auto& x : xs) {
    if (upper.value_at(x) < lower.value_at(x)) return false;
  }
  return true;
}

bool polygons_equal(const Polygon& a, const Polygon& b) {
  return a.normalized().break_points() == b.normalized().break_points();
}

}  // namespace hodgewitt
