#pragma once

#include <utility>
#include <vector>

#include "hodgewitt/rational.hpp"

namespace hodgewitt {

struct PolygonPoint {
  Rational x;
  Rational y;
  bool operator==(const PolygonPoint&) const = default;
};

/// Convex piecewise-linear polygon anchored at (0,0), stored as its break
/// points with strictly increasing x and non-decreasing segment slopes.
/// Common carrier for Newton, Hodge and slope-number polygons: a segment's
/// horizontal length is a multiplicity, its slope is the slope value.
class Polygon {
 public:
  /// A single point at the origin (the polygon of an empty multiset).
  Polygon() : points_{{Rational(0), Rational(0)}} {}

  /// Validates the break-point list: starts at (0,0), x strictly
  /// increasing, convex. Throws std::invalid_argument otherwise.
  static Polygon from_break_points(std::vector<PolygonPoint> points);

  /// Builds the polygon of a slope multiset: entries are sorted by slope
  /// and each (slope, mult) appends a segment of horizontal length mult.
  /// Duplicate slopes merge. Throws std::invalid_argument on mult < 1.
  static Polygon from_slope_multiset(const std::vector<std::pair<Rational, Int>>& segments);

  const std::vector<PolygonPoint>& break_points() const { return points_; }
  const Rational& x_max() const { return points_.back().x; }
  const Rational& y_end() const { return points_.back().y; }

  /// Value of the polygon at x by linear interpolation. Throws
  /// std::out_of_range outside [0, x_max].
  Rational value_at(const Rational& x) const;

  /// Copy with collinear interior break points removed.
  Polygon normalized() const;

  bool operator==(const Polygon&) const = default;

 private:
  explicit Polygon(std::vector<PolygonPoint> points) : points_(std::move(points)) {}

  std::vector<PolygonPoint> points_;
};

/// True iff upper(x) >= lower(x) for every x in the common domain.
/// Checking at the union of break-point x-coordinates suffices since both
/// sides are piecewise linear. Throws std::invalid_argument when the
/// polygons do not share the same final x-coordinate.
bool lies_on_or_above(const Polygon& upper, const Polygon& lower);

/// Geometric identity: break-point lists equal after collinear interior
/// points are removed from both sides.
bool polygons_equal(const Polygon& a, const Polygon& b);

}  // namespace hodgewitt
