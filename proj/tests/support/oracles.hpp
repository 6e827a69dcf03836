#pragma once

#include <vector>

#include "hodgewitt/slope_multiset.hpp"

namespace hodgewitt::testing {

// Independent slope-number formulation used as an oracle: each slope lambda
// with multiplicity h contributes h to column lambda when lambda is an
// integer, and otherwise splits between the two neighbouring integer
// columns as (ceil(lambda)-lambda)*h and (lambda-floor(lambda))*h. Agrees
// with the two-window definition on slopes in [0, n].
std::vector<Rational> slope_numbers_reference(const SlopeMultiset& s);

// Brute-force wedge power: expands multiplicities into individual copies
// and enumerates every n-element index combination. Exponential; keep the
// total multiplicity small.
SlopeMultiset wedge_power_reference(const SlopeMultiset& s, int n);

}  // namespace hodgewitt::testing
