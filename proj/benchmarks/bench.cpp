#include <benchmark/benchmark.h>

#include "helixlab/intrinsic.hpp"
#include "helixlab/numerics.hpp"
#include "helixlab/offset.hpp"

namespace {

void BM_SymEig(benchmark::State& state) {
  helixlab::Rng rng(7);
  const helixlab::Mat s = rng.symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(helixlab::sym_eig(s));
}
BENCHMARK(BM_SymEig)->Arg(4)->Arg(8)->Arg(12);

void BM_Curvature(benchmark::State& state) {
  const helixlab::MetricChart sol = helixlab::sol_metric();
  const helixlab::Vec u = {0.2, -0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(helixlab::curvature(sol, u));
}
BENCHMARK(BM_Curvature);

void BM_OffsetMetric(benchmark::State& state) {
  const helixlab::NormalField field = helixlab::catenoid_normal_field();
  const helixlab::Vec u = field.base.center();
  for (auto _ : state)
    benchmark::DoNotOptimize(helixlab::offset_metric(field, u, 0.1));
}
BENCHMARK(BM_OffsetMetric);

}  // namespace

BENCHMARK_MAIN();
