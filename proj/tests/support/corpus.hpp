#pragma once

#include <random>

#include "hodgewitt/profile.hpp"

namespace hodgewitt::testing {

// Duality-consistent multiset with integral break points for one degree of
// a dim-dimensional profile: built from dual pairs (a/b, b*t) and
// (n - a/b, b*t) with slopes confined to [max(0, n-dim), min(n, dim)].
// Total multiplicity stays at most 40.
SlopeMultiset random_dual_multiset(std::mt19937_64& rng, int degree, int dim);

// Integral break points but no duality guarantee; slopes in [0, degree].
SlopeMultiset random_multiset(std::mt19937_64& rng, int degree);

// Profile of dimension 1..4 with duality-consistent slope data in every
// degree, Hodge rows equal to the slope numbers, known-zero dominoes and
// all three hypothesis flags set. Such profiles satisfy the whole
// verification chain.
CohomologyProfile random_profile(std::mt19937_64& rng);
CohomologyProfile random_profile(std::mt19937_64& rng, int dim);

}  // namespace hodgewitt::testing
