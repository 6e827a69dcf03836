#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hodgewitt/polygon.hpp"
#include "hodgewitt/rational.hpp"

namespace hodgewitt {

/// Multiset of Frobenius slopes with multiplicities for one cohomological
/// degree n. Entries are kept sorted by slope with duplicates merged; the
/// total multiplicity is the Betti number b_n of that degree.
///
/// Construction is permissive (out-of-range slopes or non-positive merged
/// multiplicities are stored as given) so that profile validation can
/// report every problem instead of throwing at the first one.
class SlopeMultiset {
 public:
  SlopeMultiset() = default;
  explicit SlopeMultiset(int degree) : degree_(degree) {}

  static SlopeMultiset from_entries(int degree,
                                    std::vector<std::pair<Rational, Int>> entries);

  int degree() const { return degree_; }
  const std::vector<std::pair<Rational, Int>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Int total_multiplicity() const;

  /// Multiplicity of a slope; zero when the slope is absent.
  Int multiplicity(const Rational& slope) const;

  /// Newton polygons of crystalline cohomology have integer break points:
  /// every partial sum of slope * multiplicity over an ascending prefix is
  /// an integer.
  bool has_integral_break_points() const;

  /// Throws std::invalid_argument when an entry has multiplicity < 1.
  Polygon newton_polygon() const;

  bool operator==(const SlopeMultiset&) const = default;

 private:
  int degree_ = 0;
  std::vector<std::pair<Rational, Int>> entries_;  // ascending by slope, merged
};

}  // namespace hodgewitt
