// Serial reference vs OpenMP kernels on the catenoid.

#include <benchmark/benchmark.h>

#include "maxsurf/config.hpp"
#include "maxsurf/kernels.hpp"

using namespace maxsurf;

namespace {

const WeierstrassData& catenoid() {
  static const WeierstrassData d = to_data(parse_config(catenoid_config_text()));
  return d;
}

std::vector<cplx> points(int n) { return catenoid().domain.grid(n, n, 0.05, true); }

void BM_SampleSerial(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  const SurfaceView view(catenoid());
  for (auto _ : state) benchmark::DoNotOptimize(sample_surface_serial(view, pts, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  const SurfaceView view(catenoid());
  for (auto _ : state) benchmark::DoNotOptimize(sample_surface_parallel(view, pts, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}

void BM_IdentitySerial(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(identity_stats_serial(catenoid(), pts));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}

void BM_IdentityParallel(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(identity_stats_parallel(catenoid(), pts));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitySerial)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IdentityParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
