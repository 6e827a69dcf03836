#pragma once

#include <vector>

#include "hodgewitt/number_table.hpp"
#include "hodgewitt/polygon.hpp"
#include "hodgewitt/profile.hpp"
#include "hodgewitt/slope_multiset.hpp"

namespace hodgewitt {

/// Slope numbers of one degree. With h_lambda the multiplicity of slope
/// lambda in degree n = i + j,
///
///   m^{i,j} = sum over lambda in [i, i+1)   of (i + 1 - lambda) * h_lambda
///           + sum over lambda in [i-1, i)   of (lambda - i + 1) * h_lambda
///
/// evaluated exactly; the half-open windows mean an integer slope lambda = i
/// contributes only through the first sum, with coefficient 1. Returns the
/// row (m^{0,n}, ..., m^{n,0}).
std::vector<Rational> slope_numbers(const SlopeMultiset& slopes);

/// Slope-number rows for every degree 0..2*dim of a profile.
NumberTable slope_number_table(const CohomologyProfile& profile);

/// Polygon with slope i of horizontal multiplicity m^{i,n-i}. Entries must
/// be non-negative integers; throws std::domain_error otherwise.
Polygon slope_number_polygon(const std::vector<Rational>& row);

/// m^{i,j} = m^{j,i} for all i, j. Entry (i, j) lives in the degree-(i+j)
/// row, so this is a palindrome check per row.
bool check_slope_symmetry(const NumberTable& table);

}  // namespace hodgewitt
