#include <benchmark/benchmark.h>

#include "hodgewitt/catalog.hpp"
#include "hodgewitt/hodge_witt.hpp"
#include "hodgewitt/profile_io.hpp"
#include "hodgewitt/slope_numbers.hpp"
#include "hodgewitt/verifier.hpp"

namespace {

using namespace hodgewitt;

// Threefold with a rich slope spectrum: supersingular K3 times an
// ordinary elliptic curve, b_3 = 44.
CohomologyProfile threefold() {
  return kunneth_product(k3_supersingular(), elliptic_curve(EllipticKind::ordinary));
}

void BM_SlopeNumbers(benchmark::State& state) {
  SlopeMultiset slopes = threefold().slopes(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(slope_numbers(slopes));
  }
}
BENCHMARK(BM_SlopeNumbers);

void BM_SlopeNumberTable(benchmark::State& state) {
  CohomologyProfile profile = threefold();
  for (auto _ : state) {
    benchmark::DoNotOptimize(slope_number_table(profile));
  }
}
BENCHMARK(BM_SlopeNumberTable);

void BM_NewtonPolygon(benchmark::State& state) {
  SlopeMultiset slopes = threefold().slopes(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(slopes.newton_polygon());
  }
}
BENCHMARK(BM_NewtonPolygon);

void BM_WedgePower(benchmark::State& state) {
  SlopeMultiset h1 = abelian_variety(6, 3).slopes(1);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge_power(h1, k));
  }
}
BENCHMARK(BM_WedgePower)->Arg(2)->Arg(4)->Arg(6);

void BM_KunnethProduct(benchmark::State& state) {
  CohomologyProfile a = k3_supersingular();
  CohomologyProfile b = k3(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kunneth_product(a, b));
  }
}
BENCHMARK(BM_KunnethProduct);

void BM_VerifyMainTheorem(benchmark::State& state) {
  CohomologyProfile profile = threefold();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_main_theorem(profile));
  }
}
BENCHMARK(BM_VerifyMainTheorem);

void BM_ProfileRoundTrip(benchmark::State& state) {
  std::string text = serialize_profile(threefold());
  for (auto _ : state) {
    benchmark::DoNotOptimize(serialize_profile(parse_profile(text)));
  }
}
BENCHMARK(BM_ProfileRoundTrip);

}  // namespace

BENCHMARK_MAIN();
