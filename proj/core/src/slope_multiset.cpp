#include "hodgewitt/slope_multiset.hpp"

#include <map>

namespace hodgewitt {

SlopeMultiset SlopeMultiset::from_entries(int degree,
                                          std::vector<std::pair<Rational, Int>> entries) {
  std::map<Rational, Int> merged;
  for (auto& [slope, mult] : entries) {
    merged[slope] += mult;
  }
  SlopeMultiset out(degree);
  out.entries_.assign(merged.begin(), merged.end());
  return out;
}

Int SlopeMultiset::total_multiplicity() const {
  Int total = 0;
  for (const auto& [slope, mult] : entries_) total += mult;
  return total;
}

Int SlopeMultiset::multiplicity(const Rational& slope) const {
  for (const auto& [s, mult] : entries_) {
    if (s == slope) return mult;
  }
  return 0;
}

bool SlopeMultiset::has_integral_break_points() const {
  Rational partial(0);
  for (const auto& [slope, mult] : entries_) {
    partial += slope * Rational(mult);
    if (!partial.is_integer()) return false;
  }
  return true;
}

Polygon SlopeMultiset::newton_polygon() const {
  return Polygon::from_slope_multiset(entries_);
}

}  // namespace hodgewitt
