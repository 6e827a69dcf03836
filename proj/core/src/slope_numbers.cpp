#include "hodgewitt/slope_numbers.hpp"

#include <stdexcept>

namespace hodgewitt {

std::vector<Rational> slope_numbers(const SlopeMultiset& slopes) {
  const int n = slopes.degree();
  std::vector<Rational> row(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    Rational m(0);
    for (const auto& [lambda, mult] : slopes.entries()) {
      if (Rational(i) <= lambda && lambda < Rational(i + 1)) {
        m += (Rational(i + 1) - lambda) * Rational(mult);
      }
      if (Rational(i - 1) <= lambda && lambda < Rational(i)) {
        m += (lambda - Rational(i - 1)) * Rational(mult);
      }
    }
    row[static_cast<size_t>(i)] = m;
  }
  return row;
}

NumberTable slope_number_table(const CohomologyProfile& profile) {
  NumberTable table;
  for (int n = 0; n <= 2 * profile.dim; ++n) {
    table.set_row(n, slope_numbers(profile.slopes(n)));
  }
  return table;
}

Polygon slope_number_polygon(const std::vector<Rational>& row) {
  std::vector<std::pair<Rational, Int>> segments;
  for (size_t i = 0; i < row.size(); ++i) {
    const Rational& m = row[i];
    if (m.is_zero()) continue;
    if (m.is_negative()) {
      throw std::domain_error("slope_number_polygon: negative entry " + m.str() + " at i = " +
                              std::to_string(i));
    }
    if (!m.is_integer()) {
      throw std::domain_error("slope_number_polygon: non-integer entry " + m.str() + " at i = " +
                              std::to_string(i));
    }
    segments.emplace_back(Rational(static_cast<long long>(i)), m.num());
  }
  return Polygon::from_slope_multiset(segments);
}

bool check_slope_symmetry(const NumberTable& table) { return table_symmetric(table); }

}  // namespace hodgewitt
