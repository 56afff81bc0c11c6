#include <benchmark/benchmark.h>

#include <cmath>

#include "hrlab/quadrature.hpp"

namespace {

void BM_IntegrateBump(benchmark::State& state) {
  const auto bump = hrlab::make_poly_bump(0.2, 0.8, 4, {1.0, -0.5});
  const double rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto q = hrlab::integrate(hrlab::WeightedIntegral{bump, 2, -3.0, {}}, rel_tol);
    benchmark::DoNotOptimize(q.value);
  }
}
BENCHMARK(BM_IntegrateBump)->Arg(8)->Arg(10)->Arg(12);

void BM_IntegrateLogWeighted(benchmark::State& state) {
  const auto bump = hrlab::make_poly_bump(0.2, 0.8, 4);
  const hrlab::LogWeightSpec spec{static_cast<int>(state.range(0)),
                                  hrlab::iter_exp(static_cast<int>(state.range(0))), 1.0};
  for (auto _ : state) {
    auto q = hrlab::integrate(hrlab::WeightedIntegral{bump, 0, -2.0, spec}, 1e-10);
    benchmark::DoNotOptimize(q.value);
  }
}
BENCHMARK(BM_IntegrateLogWeighted)->Arg(1)->Arg(2)->Arg(3);

// wide log bump: the probe's hot path
void BM_IntegrateWideLogBump(benchmark::State& state) {
  const auto lb = hrlab::make_log_bump(1e-13, 0.999, -0.5, {1.0, 0.3});
  for (auto _ : state) {
    auto q = hrlab::integrate(hrlab::WeightedIntegral{lb, 2, 4.0, {}}, 1e-8);
    benchmark::DoNotOptimize(q.value);
  }
}
BENCHMARK(BM_IntegrateWideLogBump);

void BM_ExactOracle(benchmark::State& state) {
  const auto bump = hrlab::make_poly_bump(0.2, 0.8, 4, {1.0, -0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrlab::oracle_poly_power(bump, 2, -3.0));
  }
}
BENCHMARK(BM_ExactOracle);

}  // namespace
