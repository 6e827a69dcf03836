#include <algorithm>
#include <random>
#include <stdexcept>

#include "corpus.hpp"
#include "doctest.h"
#include "hodgewitt/profile.hpp"

using hodgewitt::CohomologyProfile;
using hodgewitt::DominoTable;
using hodgewitt::HodgeTable;
using hodgewitt::Int;
using hodgewitt::Rational;
using hodgewitt::SlopeMultiset;
using hodgewitt::Violation;

namespace {

SlopeMultiset ms(int degree, std::vector<std::pair<Rational, long long>> raw) {
  std::vector<std::pair<Rational, Int>> entries;
  for (auto& [slope, mult] : raw) entries.push_back({slope, Int(mult)});
  return SlopeMultiset::from_entries(degree, entries);
}

CohomologyProfile ordinary_elliptic() {
  CohomologyProfile p;
  p.name = "elliptic";
  p.dim = 1;
  p.slope_data[0] = ms(0, {{0, 1}});
  p.slope_data[1] = ms(1, {{0, 1}, {1, 1}});
  p.slope_data[2] = ms(2, {{1, 1}});
  p.hodge = HodgeTable{};
  p.hodge->set_row(0, {Int(1)});
  p.hodge->set_row(1, {Int(1), Int(1)});
  p.hodge->set_row(2, {Int(0), Int(1), Int(0)});
  p.dominoes = DominoTable{};
  p.flags = {true, true, true};
  return p;
}

bool has_code(const std::vector<Violation>& violations, const std::string& code) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("hodge table rows are shape checked") {
  HodgeTable t;
  CHECK_THROWS_AS(t.set_row(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(t.set_row(2, {Int(1), Int(2)}), std::invalid_argument);
  t.set_row(2, {Int(1), Int(4), Int(1)});
  CHECK(t.value(0, 2) == 1);
  CHECK(t.value(1, 1) == 4);
  CHECK(t.value(2, 0) == 1);
  CHECK(t.value(0, 1) == 0);   // row never set
  CHECK(t.value(-1, 3) == 0);  // outside the first quadrant
  CHECK_THROWS_AS(t.row(1), std::out_of_range);
}

TEST_CASE("domino table defaults") {
  DominoTable t;
  CHECK(t.value(0, 2) == 0);
  CHECK(t.all_zero());
  t.set(0, 2, Int(1));
  CHECK(t.value(0, 2) == 1);
  CHECK_FALSE(t.all_zero());
  t.set(0, 2, Int(0));
  CHECK(t.all_zero());
}

TEST_CASE("a full ordinary profile validates cleanly") {
  CHECK(hodgewitt::validate_profile(ordinary_elliptic()).empty());
}

TEST_CASE("negative dimension short-circuits") {
  CohomologyProfile p = ordinary_elliptic();
  p.dim = -1;
  auto v = hodgewitt::validate_profile(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "negative-dimension");
}

TEST_CASE("every degree from 0 to 2*dim must be present") {
  CohomologyProfile p = ordinary_elliptic();
  p.slope_data.erase(1);
  auto v = hodgewitt::validate_profile(p);
  CHECK(has_code(v, "missing-degree"));
  auto it = std::find_if(v.begin(), v.end(),
                         [](const Violation& x) { return x.code == "missing-degree"; });
  REQUIRE(it != v.end());
  CHECK(it->degree == 1);
}

TEST_CASE("slope data outside the degree range is flagged") {
  CohomologyProfile p = ordinary_elliptic();
  p.slope_data[3] = ms(3, {{1, 2}});
  CHECK(has_code(hodgewitt::validate_profile(p), "degree-out-of-range"));
}

TEST_CASE("non-positive multiplicities are flagged") {
  CohomologyProfile p = ordinary_elliptic();
  p.slope_data[1] = ms(1, {{0, 0}, {1, 0}});
  CHECK(has_code(hodgewitt::validate_profile(p), "non-positive-multiplicity"));
}

TEST_CASE("slopes must lie in [0, n]") {
  CohomologyProfile p = ordinary_elliptic();
  p.slope_data[1] = ms(1, {{Rational(-1, 2), 1}, {Rational(3, 2), 1}});
  auto v = hodgewitt::validate_profile(p);
  int count = 0;
  for (const auto& x : v) {
    if (x.code == "slope-out-of-range") ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("newton break points must be integral") {
  CohomologyProfile p = ordinary_elliptic();
  p.slope_data[1] = ms(1, {{Rational(1, 3), 1}, {Rational(2, 3), 1}});
  CHECK(has_code(hodgewitt::validate_profile(p), "non-integral-break-points"));
}

TEST_CASE("hodge rows outside the degree range are flagged") {
  CohomologyProfile p = ordinary_elliptic();
  p.hodge->set_row(3, {Int(0), Int(0), Int(0), Int(0)});
  CHECK(has_code(hodgewitt::validate_profile(p), "hodge-degree-out-of-range"));
}

TEST_CASE("negative hodge numbers are flagged with their position") {
  CohomologyProfile p = ordinary_elliptic();
  p.hodge->set_row(1, {Int(-1), Int(1)});
  auto v = hodgewitt::validate_profile(p);
  auto it = std::find_if(v.begin(), v.end(),
                         [](const Violation& x) { return x.code == "negative-hodge-number"; });
  REQUIRE(it != v.end());
  CHECK(it->i == 0);
  CHECK(it->j == 1);
}

TEST_CASE("hodge numbers vanish beyond the dimension") {
  CohomologyProfile p = ordinary_elliptic();
  p.hodge->set_row(2, {Int(1), Int(1), Int(0)});  // h^{0,2} on a curve
  CHECK(has_code(hodgewitt::validate_profile(p), "hodge-outside-dimension"));
}

TEST_CASE("negative domino numbers are flagged") {
  CohomologyProfile p = ordinary_elliptic();
  p.flags.hodge_witt = false;
  p.dominoes->set(0, 1, Int(-2));
  CHECK(has_code(hodgewitt::validate_profile(p), "negative-domino"));
}

TEST_CASE("domino numbers vanish outside the dimension box") {
  CohomologyProfile p = ordinary_elliptic();
  p.flags.hodge_witt = false;
  p.dominoes->set(0, 2, Int(1));
  CHECK(has_code(hodgewitt::validate_profile(p), "domino-outside-dimension"));
}

TEST_CASE("hodge-witt flag conflicts with nonzero dominoes") {
  CohomologyProfile p = ordinary_elliptic();
  p.dominoes->set(0, 1, Int(1));
  auto v = hodgewitt::validate_profile(p);
  CHECK(has_code(v, "domino-flag-conflict"));

  p.flags.hodge_witt = false;
  CHECK_FALSE(has_code(hodgewitt::validate_profile(p), "domino-flag-conflict"));
  p.flags.hodge_witt = std::nullopt;
  CHECK_FALSE(has_code(hodgewitt::validate_profile(p), "domino-flag-conflict"));
}

TEST_CASE("duality checking does not depend on entry order") {
  std::mt19937_64 rng(7121);
  for (int round = 0; round < 50; ++round) {
    CohomologyProfile p = hodgewitt::testing::random_profile(rng);
    CHECK(hodgewitt::check_slope_duality(p));
    for (auto& [n, multiset] : p.slope_data) {
      std::vector<std::pair<Rational, Int>> entries = multiset.entries();
      std::shuffle(entries.begin(), entries.end(), rng);
      multiset = SlopeMultiset::from_entries(n, entries);
    }
    CHECK(hodgewitt::check_slope_duality(p));
    CHECK(hodgewitt::validate_profile(p).empty());
  }
}
