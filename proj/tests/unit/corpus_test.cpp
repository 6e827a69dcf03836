#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "hodgewitt/profile.hpp"
#include "hodgewitt/verifier.hpp"

using hodgewitt::CohomologyProfile;
using hodgewitt::Int;
using hodgewitt::SlopeMultiset;

TEST_CASE("generated multisets respect the requested constraints") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 200; ++round) {
    int dim = 1 + static_cast<int>(rng() % 4);
    int degree = static_cast<int>(rng() % (2 * dim + 1));
    SlopeMultiset s = hodgewitt::testing::random_dual_multiset(rng, degree, dim);
    CHECK(s.degree() == degree);
    CHECK(s.total_multiplicity() <= 40);
    CHECK(s.has_integral_break_points());
    for (const auto& [slope, mult] : s.entries()) {
      CHECK(mult >= 1);
      CHECK(slope >= hodgewitt::Rational(std::max(0, degree - dim)));
      CHECK(slope <= hodgewitt::Rational(std::min(degree, dim)));
      CHECK(s.multiplicity(hodgewitt::Rational(degree) - slope) == mult);
    }
  }
}

TEST_CASE("generated profiles are valid and pass the full chain") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 120; ++round) {
    CohomologyProfile p = hodgewitt::testing::random_profile(rng);
    CHECK(p.dim >= 1);
    CHECK(p.dim <= 4);
    CHECK(hodgewitt::validate_profile(p).empty());
    CHECK(hodgewitt::check_slope_duality(p));
    CHECK(hodgewitt::verify_main_theorem(p).overall == hodgewitt::Verdict::pass);
  }
}

TEST_CASE("generation is deterministic for a fixed seed") {
  std::mt19937_64 a(777);
  std::mt19937_64 b(777);
  for (int round = 0; round < 20; ++round) {
    CHECK(hodgewitt::testing::random_profile(a) == hodgewitt::testing::random_profile(b));
  }
}
