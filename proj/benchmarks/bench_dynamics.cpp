#include <benchmark/benchmark.h>

#include "inctab/dynamics.hpp"
#include "inctab/enumeration.hpp"
#include "inctab/io.hpp"
#include "inctab/kjdt.hpp"

using namespace inctab;

namespace {

const IncreasingTableau& tableau_4x10() {
  static const IncreasingTableau t = parse_tableau(
      "q=26 shape=4x10\n"
      "1 3 4 5 7 8 11 13 14 17\n"
      "2 4 7 10 12 13 15 17 19 21\n"
      "3 6 9 12 13 14 16 18 21 24\n"
      "6 8 11 15 20 22 23 24 25 26\n");
  return t;
}

void BM_Promote4x10(benchmark::State& state) {
  IncreasingTableau t = tableau_4x10();
  for (auto _ : state) {
    t = promote(t);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_Promote4x10);

void BM_Evacuate4x10(benchmark::State& state) {
  const auto& t = tableau_4x10();
  for (auto _ : state) benchmark::DoNotOptimize(evacuate(t));
}
BENCHMARK(BM_Evacuate4x10);

void BM_Orbit4x10(benchmark::State& state) {
  const auto& t = tableau_4x10();
  for (auto _ : state) benchmark::DoNotOptimize(orbit_size(t));
}
BENCHMARK(BM_Orbit4x10)->Unit(benchmark::kMillisecond);

void BM_Enumerate3x3(benchmark::State& state) {
  const EnumSpec spec{Shape::rectangle(3, 3), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_Enumerate3x3)->DenseRange(6, 9)->Unit(benchmark::kMicrosecond);

void BM_OrbitPartition(benchmark::State& state) {
  const EnumSpec spec{Shape::rectangle(3, 3), 8};
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(spec, jobs));
}
BENCHMARK(BM_OrbitPartition)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
