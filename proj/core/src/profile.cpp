#include "hodgewitt/profile.hpp"

#include <map>
#include <stdexcept>

namespace hodgewitt {

void HodgeTable::set_row(int degree, std::vector<Int> numbers) {
  if (degree < 0) throw std::invalid_argument("HodgeTable: negative degree");
  if (numbers.size() != static_cast<size_t>(degree) + 1) {
    throw std::invalid_argument("HodgeTable: degree " + std::to_string(degree) + " row needs " +
                                std::to_string(degree + 1) + " entries, got " +
                                std::to_string(numbers.size()));
  }
  rows_[degree] = std::move(numbers);
}

const std::vector<Int>& HodgeTable::row(int degree) const {
  auto it = rows_.find(degree);
  if (it == rows_.end()) {
    throw std::out_of_range("HodgeTable: no row for degree " + std::to_string(degree));
  }
  return it->second;
}

Int HodgeTable::value(int i, int j) const {
  if (i < 0 || j < 0) return 0;
  auto it = rows_.find(i + j);
  if (it == rows_.end()) return 0;
  return it->second[static_cast<size_t>(i)];
}

void DominoTable::set(int i, int j, Int value) { entries_[{i, j}] = std::move(value); }

Int DominoTable::value(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Int(0) : it->second;
}

bool DominoTable::all_zero() const {
  for (const auto& [ij, value] : entries_) {
    if (value != 0) return false;
  }
  return true;
}

SlopeMultiset CohomologyProfile::slopes(int degree) const {
  auto it = slope_data.find(degree);
  return it == slope_data.end() ? SlopeMultiset(degree) : it->second;
}

std::vector<Violation> validate_profile(const CohomologyProfile& profile) {
  std::vector<Violation> out;
  auto add = [&out](std::string code, std::string message, std::optional<int> degree = {},
                    std::optional<int> i = {}, std::optional<int> j = {}) {
    out.push_back({std::move(code), std::move(message), degree, i, j});
  };

  if (profile.dim < 0) {
    add("negative-dimension", "dimension " + std::to_string(profile.dim) + " is negative");
    return out;  // nothing below is meaningful
  }
  const int top = 2 * profile.dim;

  for (int n = 0; n <= top; ++n) {
    if (profile.slope_data.count(n) == 0) {
      add("missing-degree", "no slope data for degree " + std::to_string(n), n);
    }
  }
  for (const auto& [n, multiset] : profile.slope_data) {
    if (n < 0 || n > top) {
      add("degree-out-of-range",
          "slope data for degree " + std::to_string(n) + " outside 0.." + std::to_string(top), n);
      continue;
    }
    for (const auto& [slope, mult] : multiset.entries()) {
      if (mult < 1) {
        add("non-positive-multiplicity",
            "degree " + std::to_string(n) + ": slope " + slope.str() +
                " has non-positive multiplicity " + mult.str(),
            n);
      }
      if (slope < Rational(0) || slope > Rational(n)) {
        add("slope-out-of-range",
            "degree " + std::to_string(n) + ": slope " + slope.str() + " outside [0, " +
                std::to_string(n) + "]",
            n);
      }
    }
    if (!multiset.has_integral_break_points()) {
      add("non-integral-break-points",
          "degree " + std::to_string(n) + ": Newton polygon has a non-integral break point", n);
    }
  }

  if (profile.hodge) {
    for (const auto& [n, row] : profile.hodge->rows()) {
      if (n < 0 || n > top) {
        add("hodge-degree-out-of-range",
            "Hodge row for degree " + std::to_string(n) + " outside 0.." + std::to_string(top), n);
        continue;
      }
      for (int i = 0; i <= n; ++i) {
        const Int& h = row[static_cast<size_t>(i)];
        int j = n - i;
        if (h < 0) {
          add("negative-hodge-number",
              "h^{" + std::to_string(i) + "," + std::to_string(j) + "} = " + h.str() +
                  " is negative",
              n, i, j);
        }
        if ((i > profile.dim || j > profile.dim) && h != 0) {
          add("hodge-outside-dimension",
              "h^{" + std::to_string(i) + "," + std::to_string(j) + "} = " + h.str() +
                  " must vanish beyond dimension " + std::to_string(profile.dim),
              n, i, j);
        }
      }
    }
  }

  if (profile.dominoes) {
    for (const auto& [ij, t] : profile.dominoes->entries()) {
      const auto& [i, j] = ij;
      if (t < 0) {
        add("negative-domino",
            "T^{" + std::to_string(i) + "," + std::to_string(j) + "} = " + t.str() +
                " is negative",
            i + j, i, j);
      }
      if ((i < 0 || j < 0 || i > profile.dim || j > profile.dim) && t != 0) {
        add("domino-outside-dimension",
            "T^{" + std::to_string(i) + "," + std::to_string(j) + "} = " + t.str() +
                " must vanish outside 0 <= i,j <= " + std::to_string(profile.dim),
            i + j, i, j);
      }
    }
    if (profile.flags.hodge_witt == true && !profile.dominoes->all_zero()) {
      add("domino-flag-conflict",
          "profile is flagged Hodge-Witt but carries a nonzero domino number; a Hodge-Witt "
          "variety has all T^{i,j} = 0");
    }
  }

  return out;
}

std::vector<DualityViolation> duality_violations(const CohomologyProfile& profile) {
  std::vector<DualityViolation> out;
  for (const auto& [n, multiset] : profile.slope_data) {
    for (const auto& [slope, mult] : multiset.entries()) {
      Rational dual = Rational(n) - slope;
      Int dual_mult = multiset.multiplicity(dual);
      if (dual_mult != mult) {
        out.push_back({n, slope, mult, dual_mult});
      }
    }
  }
  return out;
}

bool check_slope_duality(const CohomologyProfile& profile) {
  return duality_violations(profile).empty();
}

Int betti_number(const CohomologyProfile& profile, int degree) {
  if (degree < 0 || degree > 2 * profile.dim) {
    throw std::out_of_range("betti_number: degree " + std::to_string(degree) + " outside 0.." +
                            std::to_string(2 * profile.dim));
  }
  return profile.slopes(degree).total_multiplicity();
}

Polygon hodge_polygon(const HodgeTable& hodge, int degree) {
  std::vector<std::pair<Rational, Int>> segments;
  if (hodge.has_row(degree)) {
    const auto& row = hodge.row(degree);
    for (int i = 0; i <= degree; ++i) {
      const Int& h = row[static_cast<size_t>(i)];
      if (h != 0) segments.emplace_back(Rational(i), h);
    }
  }
  return Polygon::from_slope_multiset(segments);
}

bool is_ordinary(const CohomologyProfile& profile) {
  if (!profile.hodge) {
    throw std::invalid_argument("is_ordinary: profile \"" + profile.name +
                                "\" has no Hodge table");
  }
  for (int n = 0; n <= 2 * profile.dim; ++n) {
    if (!polygons_equal(profile.slopes(n).newton_polygon(), hodge_polygon(*profile.hodge, n))) {
      return false;
    }
  }
  return true;
}

}  // namespace hodgewitt
