#include <benchmark/benchmark.h>

#include "hrlab/engine.hpp"
#include "hrlab/probe.hpp"

namespace {

hrlab::ModeExpansion three_mode_expansion(int depth) {
  const auto params = hrlab::validate_params(
      {4, 1.0, depth, 1.0, depth == 0 ? 1.0 : hrlab::iter_exp(depth)});
  const auto bump = hrlab::make_poly_bump(0.2, 0.8, 4, {1.0, -0.5});
  return hrlab::ModeExpansion(params, {{hrlab::make_mode(4, 0), bump},
                                       {hrlab::make_mode(4, 2), bump},
                                       {hrlab::make_mode(4, 5), bump}});
}

void BM_HardyRellichReport(benchmark::State& state) {
  const auto expansion = three_mode_expansion(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrlab::hardy_rellich_report(expansion).slack);
  }
}
BENCHMARK(BM_HardyRellichReport)->Arg(0)->Arg(2);

void BM_FactorizationResidual(benchmark::State& state) {
  const auto bump = hrlab::make_poly_bump(0.2, 0.8, 4, {1.0, -0.5});
  const hrlab::LogWeightSpec spec{2, hrlab::iter_exp(2), 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrlab::factorization_residual(bump, 0.5, spec));
  }
}
BENCHMARK(BM_FactorizationResidual);

void BM_RayleighQuotient(benchmark::State& state) {
  const auto params = hrlab::validate_params({5, 0.0, 0, 1.0, 1.0});
  const auto lb = hrlab::make_log_bump(1e-13, 0.999, -0.5, {1.0, 0.2, -0.1});
  const hrlab::ModeExpansion expansion(params, {{hrlab::make_mode(5, 0), lb}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrlab::rayleigh_quotient(expansion));
  }
}
BENCHMARK(BM_RayleighQuotient);

}  // namespace
