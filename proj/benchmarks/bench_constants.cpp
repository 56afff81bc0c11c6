#include <benchmark/benchmark.h>

#include "hrlab/sharp_constants.hpp"

namespace {

void BM_HardyRellichConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrlab::hardy_rellich_constant(n, 0.7).value);
  }
}
BENCHMARK(BM_HardyRellichConstant)->Arg(2)->Arg(5)->Arg(12);

void BM_ConstantInequalityScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrlab::check_constant_inequality(6, -2.0, 1000).holds);
  }
}
BENCHMARK(BM_ConstantInequalityScan);

}  // namespace
