#include <benchmark/benchmark.h>

#include "uavrl/oracle.hpp"
#include "uavrl/scenario.hpp"

namespace {

uavrl::Scenario make_scenario(int width, int height, int stations) {
  uavrl::Scenario s;
  s.width_cells = width;
  s.height_cells = height;
  s.start = {0, height / 2};
  s.goal = {width - 1, height / 2};
  for (int i = 0; i < stations; ++i) {
    const double f = stations == 1 ? 0.5 : static_cast<double>(i) / (stations - 1);
    s.base_stations.push_back({{static_cast<int>(f * (width - 1)), height / 2}});
  }
  return s;
}

void BM_coverage_serial(benchmark::State& state) {
  const auto s = make_scenario(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)), 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uavrl::build_coverage_serial(s));
  }
}

void BM_coverage_parallel(benchmark::State& state) {
  const auto s = make_scenario(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)), 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uavrl::build_coverage(s));
  }
}

void BM_value_iteration_serial(benchmark::State& state) {
  const auto s = make_scenario(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)), 8);
  const auto coverage = uavrl::build_coverage_serial(s);
  const auto space = uavrl::ActionSpace::compass8();
  for (auto _ : state) {
    benchmark::DoNotOptimize(uavrl::value_iteration_serial(s, coverage, space, 0.95));
  }
}

void BM_value_iteration_parallel(benchmark::State& state) {
  const auto s = make_scenario(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)), 8);
  const auto coverage = uavrl::build_coverage(s);
  const auto space = uavrl::ActionSpace::compass8();
  for (auto _ : state) {
    benchmark::DoNotOptimize(uavrl::value_iteration(s, coverage, space, 0.95));
  }
}

}  // namespace

BENCHMARK(BM_coverage_serial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_coverage_parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_value_iteration_serial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_value_iteration_parallel)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
