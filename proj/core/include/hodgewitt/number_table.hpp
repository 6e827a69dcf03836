#pragma once

#include <map>
#include <vector>

#include "hodgewitt/rational.hpp"

namespace hodgewitt {

/// Triangular table of rational values indexed by (i, j) with i + j = n:
/// the degree-n row is the list (v^{0,n}, v^{1,n-1}, ..., v^{n,0}).
/// Used for slope numbers m^{i,j}, Hodge-Witt numbers h_W^{i,j} and Hodge
/// numbers h^{i,j} alike.
class NumberTable {
 public:
  /// Row for degree n must have exactly n + 1 entries.
  void set_row(int degree, std::vector<Rational> row);

  bool has_row(int degree) const { return rows_.count(degree) != 0; }
  const std::vector<Rational>& row(int degree) const;

  /// v^{i,j}; zero for negative indices or rows that were never set.
  Rational value(int i, int j) const;

  const std::map<int, std::vector<Rational>>& rows() const { return rows_; }

  bool operator==(const NumberTable&) const = default;

 private:
  std::map<int, std::vector<Rational>> rows_;
};

struct AsymmetricEntry {
  int degree;
  int i;
  int j;  // i < j, value(i,j) != value(j,i)
  Rational value_ij;
  Rational value_ji;
};

/// All (i, j) pairs violating v^{i,j} = v^{j,i}. Both entries of a pair
/// live in the same degree row i + j.
std::vector<AsymmetricEntry> asymmetric_entries(const NumberTable& table);

bool table_symmetric(const NumberTable& table);

}  // namespace hodgewitt
