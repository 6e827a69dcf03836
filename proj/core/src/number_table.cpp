#include "hodgewitt/number_table.hpp"

#include <stdexcept>

namespace hodgewitt {

void NumberTable::set_row(int degree, std::vector<Rational> row) {
  if (degree < 0) throw std::invalid_argument("NumberTable: negative degree");
  if (row.size() != static_cast<size_t>(degree) + 1) {
    throw std::invalid_argument("NumberTable: degree " + std::to_string(degree) + " row needs " +
                                std::to_string(degree + 1) + " entries, got " +
                                std::to_string(row.size()));
  }
  rows_[degree] = std::move(row);
}

const std::vector<Rational>& NumberTable::row(int degree) const {
  auto it = rows_.find(degree);
  if (it == rows_.end()) {
    throw std::out_of_range("NumberTable: no row for degree " + std::to_string(degree));
  }
  return it->second;
}

Rational NumberTable::value(int i, int j) const {
  if (i < 0 || j < 0) return Rational(0);
  auto it = rows_.find(i + j);
  if (it == rows_.end()) return Rational(0);
  return it->second[static_cast<size_t>(i)];
}

std::vector<AsymmetricEntry> asymmetric_entries(const NumberTable& table) {
  std::vector<AsymmetricEntry> out;
  for (const auto& [degree, row] : table.rows()) {
    for (int i = 0; 2 * i < degree; ++i) {
      int j = degree - i;
      const Rational& a = row[static_cast<size_t>(i)];
      const Rational& b = row[static_cast<size_t>(j)];
      if (!(a == b)) out.push_back({degree, i, j, a, b});
    }
  }
  return out;
}

bool table_symmetric(const NumberTable& table) { return asymmetric_entries(table).empty(); }

}  // namespace hodgewitt
