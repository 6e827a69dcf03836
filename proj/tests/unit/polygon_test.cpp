#include <algorithm>
#include <random>
#include <stdexcept>

#include "corpus.hpp"
#include "doctest.h"
#include "hodgewitt/polygon.hpp"

using hodgewitt::Int;
using hodgewitt::lies_on_or_above;
using hodgewitt::Polygon;
using hodgewitt::PolygonPoint;
using hodgewitt::polygons_equal;
using hodgewitt::Rational;

namespace {

Polygon from_points(std::vector<std::pair<long long, Rational>> points) {
  std::vector<PolygonPoint> bp;
  for (auto& [x, y] : points) bp.push_back({Rational(x), y});
  return Polygon::from_break_points(bp);
}

std::vector<std::pair<Rational, Int>> slope_entries(
    std::vector<std::pair<Rational, long long>> raw) {
  std::vector<std::pair<Rational, Int>> out;
  for (auto& [slope, mult] : raw) out.push_back({slope, Int(mult)});
  return out;
}

}  // namespace

TEST_CASE("construction from slope multisets") {
  Polygon two_segments = Polygon::from_slope_multiset(slope_entries({{0, 1}, {1, 1}}));
  CHECK(two_segments.break_points() ==
        from_points({{0, 0}, {1, 0}, {2, 1}}).break_points());

  Polygon half = Polygon::from_slope_multiset(slope_entries({{Rational(1, 2), 2}}));
  CHECK(half.break_points() == from_points({{0, 0}, {2, 1}}).break_points());

  Polygon k3_height_3 = Polygon::from_slope_multiset(
      slope_entries({{Rational(2, 3), 3}, {1, 16}, {Rational(4, 3), 3}}));
  CHECK(k3_height_3.break_points() ==
        from_points({{0, 0}, {3, 2}, {19, 18}, {22, 22}}).break_points());
}

TEST_CASE("non-positive multiplicities are rejected") {
  CHECK_THROWS_AS(Polygon::from_slope_multiset(slope_entries({{1, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(Polygon::from_slope_multiset(slope_entries({{1, -2}})),
                  std::invalid_argument);
  // rejected even when a positive duplicate would push the merged sum up
  CHECK_THROWS_AS(Polygon::from_slope_multiset(slope_entries({{1, 3}, {1, 0}})),
                  std::invalid_argument);
}

TEST_CASE("break point lists are validated") {
  CHECK_THROWS_AS(Polygon::from_break_points({}), std::invalid_argument);
  CHECK_THROWS_AS(Polygon::from_break_points({{Rational(1), Rational(0)}}),
                  std::invalid_argument);  // must start at the origin
  CHECK_THROWS_AS(from_points({{0, 0}, {1, 0}, {1, 1}}), std::invalid_argument);
  // slopes 1 then 0: concave
  CHECK_THROWS_AS(from_points({{0, 0}, {1, 1}, {2, 1}}), std::invalid_argument);
  CHECK_NOTHROW(from_points({{0, 0}, {1, 0}, {2, 1}}));
}

TEST_CASE("interpolation") {
  Polygon p = from_points({{0, 0}, {1, 0}, {2, 1}});
  CHECK(p.value_at(Rational(0)) == Rational(0));
  CHECK(p.value_at(Rational(1, 2)) == Rational(0));
  CHECK(p.value_at(Rational(3, 2)) == Rational(1, 2));
  CHECK(p.value_at(Rational(2)) == Rational(1));
  CHECK_THROWS_AS(p.value_at(Rational(-1)), std::out_of_range);
  CHECK_THROWS_AS(p.value_at(Rational(5, 2)), std::out_of_range);
}

TEST_CASE("dominance comparison") {
  Polygon newton_ss = Polygon::from_slope_multiset(slope_entries({{Rational(1, 2), 2}}));
  Polygon hodge_11 = Polygon::from_slope_multiset(slope_entries({{0, 1}, {1, 1}}));

  CHECK(lies_on_or_above(newton_ss, newton_ss));
  CHECK(lies_on_or_above(newton_ss, hodge_11));
  CHECK_FALSE(lies_on_or_above(hodge_11, newton_ss));

  Polygon longer = Polygon::from_slope_multiset(slope_entries({{0, 3}}));
  CHECK_THROWS_AS(lies_on_or_above(newton_ss, longer), std::invalid_argument);
}

TEST_CASE("equality ignores collinear interior points") {
  Polygon straight = from_points({{0, 0}, {2, 1}});
  Polygon with_midpoint =
      Polygon::from_break_points({{Rational(0), Rational(0)},
                                  {Rational(1), Rational(1, 2)},
                                  {Rational(2), Rational(1)}});
  Polygon bent = from_points({{0, 0}, {1, 0}, {2, 1}});

  CHECK(polygons_equal(bent, bent));
  CHECK(polygons_equal(straight, with_midpoint));
  CHECK_FALSE(polygons_equal(straight, bent));
}

TEST_CASE("construction is invariant under permutation and splitting") {
  std::mt19937_64 rng(4579);
  for (int round = 0; round < 200; ++round) {
    hodgewitt::SlopeMultiset s = hodgewitt::testing::random_multiset(rng, 4);
    if (s.empty()) continue;
    std::vector<std::pair<Rational, Int>> entries = s.entries();
    Polygon base = Polygon::from_slope_multiset(entries);

    std::shuffle(entries.begin(), entries.end(), rng);
    CHECK(polygons_equal(base, Polygon::from_slope_multiset(entries)));

    // split the largest entry in two
    auto widest = std::max_element(
        entries.begin(), entries.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (widest->second > 1) {
      Int part = widest->second / 2;
      std::vector<std::pair<Rational, Int>> split = entries;
      split.push_back({widest->first, part});
      for (auto& [slope, mult] : split) {
        if (slope == widest->first && mult == widest->second) {
          mult -= part;
          break;
        }
      }
      CHECK(polygons_equal(base, Polygon::from_slope_multiset(split)));
    }
  }
}

TEST_CASE("convexity holds for every constructed polygon") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    hodgewitt::SlopeMultiset s = hodgewitt::testing::random_multiset(rng, 3);
    if (s.empty()) continue;
    Polygon p = Polygon::from_slope_multiset(s.entries());
    const auto& bp = p.break_points();
    for (size_t k = 2; k < bp.size(); ++k) {
      Rational prev = (bp[k - 1].y - bp[k - 2].y) / (bp[k - 1].x - bp[k - 2].x);
      Rational next = (bp[k].y - bp[k - 1].y) / (bp[k].x - bp[k - 1].x);
      CHECK(prev <= next);
    }
  }
}

TEST_CASE("dominance is a partial order on polygons with common endpoints") {
  std::mt19937_64 rng(31337);
  int rounds = 0;
  while (rounds < 100) {
    hodgewitt::SlopeMultiset s = hodgewitt::testing::random_multiset(rng, 3);
    if (s.empty()) continue;
    ++rounds;
    Polygon low = Polygon::from_slope_multiset(s.entries());

    // the chord from the origin to the endpoint lies on or above any convex
    // polygon with those endpoints, and the pointwise average sits between
    std::vector<PolygonPoint> chord_points = {{Rational(0), Rational(0)},
                                              {low.x_max(), low.y_end()}};
    Polygon chord = Polygon::from_break_points(chord_points);
    std::vector<PolygonPoint> mid_points;
    for (const PolygonPoint& p : low.break_points()) {
      mid_points.push_back({p.x, (p.y + chord.value_at(p.x)) / Rational(2)});
    }
    Polygon mid = Polygon::from_break_points(mid_points);

    // reflexivity
    CHECK(lies_on_or_above(low, low));
    // chain and transitivity
    CHECK(lies_on_or_above(chord, mid));
    CHECK(lies_on_or_above(mid, low));
    CHECK(lies_on_or_above(chord, low));
    // antisymmetry
    if (lies_on_or_above(low, mid) && lies_on_or_above(mid, low)) {
      CHECK(polygons_equal(low, mid));
    }
    if (polygons_equal(low, mid)) {
      CHECK(lies_on_or_above(low, mid));
      CHECK(lies_on_or_above(mid, low));
    }
  }
}
