// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "liemult/laurent.hpp"
#include "liemult/multiplicity.hpp"
#include "liemult/nested_sets.hpp"
#include "liemult/partition.hpp"
#include "liemult/root_system.hpp"

using namespace liemult;

namespace {

QVector qv(std::vector<int> v) {
  QVector out;
  for (int x : v) out.push_back(Rational(x));
  return out;
}

void BM_EnumerateNestedSets(benchmark::State& state) {
  RootSystem rs = build_root_system(Family::B, 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mpns(rs));
}
BENCHMARK(BM_EnumerateNestedSets)->Unit(benchmark::kMillisecond);

// Fresh engine per evaluation: dominated by chamber and box construction.
void BM_PartitionCold(benchmark::State& state) {
  RootSystem rs = build_root_system(Family::B, 3);
  Weight w = qv({4, 3, 2});
  for (auto _ : state) {
    PartitionEngine eng(rs);
    benchmark::DoNotOptimize(eng.kostant_partition(w));
  }
}
BENCHMARK(BM_PartitionCold)->Unit(benchmark::kMillisecond);

// One engine, varying arguments inside one chamber: the steady state cost.
void BM_PartitionWarm(benchmark::State& state) {
  RootSystem rs = build_root_system(Family::B, 3);
  PartitionEngine eng(rs);
  eng.kostant_partition(qv({4, 3, 2}));  // prime caches
  long n = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eng.kostant_partition(qv({static_cast<int>(n % 40 + 4), 3, 2})));
    ++n;
  }
}
BENCHMARK(BM_PartitionWarm)->Unit(benchmark::kMicrosecond);

void BM_PartitionDp(benchmark::State& state) {
  RootSystem rs = build_root_system(Family::B, 3);
  PartitionEngine eng(rs);
  Weight w = qv({4, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(eng.kostant_partition_dp(w));
}
BENCHMARK(BM_PartitionDp)->Unit(benchmark::kMillisecond);

void BM_KostantStretch(benchmark::State& state) {
  RootSystem rs = build_root_system(Family::B, 2);
  for (auto _ : state) {
    PartitionEngine eng(rs);
    benchmark::DoNotOptimize(
        eng.kostant_stretch(qv({1, 1}), qv({0, 0})));
  }
}
BENCHMARK(BM_KostantStretch)->Unit(benchmark::kMillisecond);

void BM_WeightMultiplicity(benchmark::State& state) {
  MultiplicityCalculator calc(Family::C, 3);
  Weight lambda = calc.rs().from_funda_to_cano(qv({3, 2, 1}));
  Weight mu = calc.rs().from_funda_to_cano(qv({1, 0, 1}));
  calc.weight_multiplicity(lambda, mu);  // prime caches
  long n = 0;
  for (auto _ : state) {
    Weight shifted = calc.rs().from_funda_to_cano(
        qv({static_cast<int>(n % 3 + 1), 0, 1}));
    benchmark::DoNotOptimize(calc.weight_multiplicity(lambda, shifted));
    ++n;
  }
}
BENCHMARK(BM_WeightMultiplicity)->Unit(benchmark::kMicrosecond);

void BM_Freudenthal(benchmark::State& state) {
  RootSystem rs = build_root_system(Family::C, 3);
  Weight lambda = rs.from_funda_to_cano(qv({3, 2, 1}));
  for (auto _ : state) {
    MultiplicityCalculator calc(rs);
    benchmark::DoNotOptimize(
        calc.freudenthal_multiplicity(lambda, qv({1, 1, 0})));
  }
}
BENCHMARK(BM_Freudenthal)->Unit(benchmark::kMillisecond);

void BM_TensorCoefficient(benchmark::State& state) {
  MultiplicityCalculator calc(Family::A, 4);
  Weight l = qv({18, 11, 9, 4, 2});
  Weight m = qv({20, 17, 9, 4, 0});
  Weight n = qv({26, 25, 19, 16, 8});
  calc.tensor_coefficient(l, m, n);  // prime caches
  for (auto _ : state) {
    MultiplicityCalculator cold(Family::A, 4);
    benchmark::DoNotOptimize(cold.tensor_coefficient(l, m, n));
  }
}
BENCHMARK(BM_TensorCoefficient)->Unit(benchmark::kMillisecond);

void BM_SeriesInvert(benchmark::State& state) {
  std::vector<MultiPoly> coeffs;
  for (int k = 0; k < 12; ++k)
    coeffs.push_back(MultiPoly::constant({}, Rational(k % 5 + 1, k + 1)));
  LaurentSeries s = LaurentSeries::make("z", -2, std::move(coeffs), 10);
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(s));
}
BENCHMARK(BM_SeriesInvert)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
