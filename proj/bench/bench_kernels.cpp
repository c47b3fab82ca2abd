#include <benchmark/benchmark.h>

#include "asf/kernels.hpp"

using namespace asf;
using namespace asf::kernels;

namespace {

const SmallField& field(int log2q) {
  static const SmallField f256(FiniteField::canonical(2, 8));
  static const SmallField f1024(FiniteField::canonical(2, 10));
  static const SmallField f729(FiniteField::canonical(3, 6));
  switch (log2q) {
    case 8: return f256;
    case 10: return f1024;
    default: return f729;
  }
}

Exec mode(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_LeastPreimages(benchmark::State& state) {
  const auto& f = field(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(least_preimages(f.wp_table(), f.order(), mode(state)));
}

void BM_WpIntersection(benchmark::State& state) {
  const auto& f = field(static_cast<int>(state.range(0)));
  const std::vector<Index> tuple{1, 2, 3, 5};
  for (auto _ : state) benchmark::DoNotOptimize(scaled_wp_intersection(f, tuple, mode(state)));
}

void BM_GaPoints(benchmark::State& state) {
  const auto& f = field(static_cast<int>(state.range(0)));
  const std::vector<Index> tuple{1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(ga_points(f, tuple, mode(state)));
}

void BM_BaldwinSaxl(benchmark::State& state) {
  static const SmallField f(FiniteField::canonical(3, 3));
  std::vector<Index> units;
  for (Index i = 1; i < f.order(); ++i) units.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(baldwin_saxl_index(f, units, mode(state)));
}

void BM_RationalInverseSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rational_inverse_search(static_cast<std::uint32_t>(state.range(0)), 3, mode(state)));
  }
}

}  // namespace

BENCHMARK(BM_LeastPreimages)->ArgsProduct({{8, 10, 0}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WpIntersection)->ArgsProduct({{8, 10, 0}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GaPoints)->ArgsProduct({{8, 0}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BaldwinSaxl)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RationalInverseSearch)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
