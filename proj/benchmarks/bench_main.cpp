#include <benchmark/benchmark.h>

#include "beamforge/bimodal.hpp"
#include "beamforge/inventory.hpp"
#include "beamforge/mode_sets.hpp"
#include "beamforge/oracle.hpp"
#include "beamforge/sweep.hpp"

namespace bf = beamforge;

namespace {

// -beta grows with the argument, so n_star and the pair scans grow too
void BM_Inventory(benchmark::State& state) {
  const bf::Params p{-static_cast<double>(state.range(0)), 1.0, 3.0};
  const auto spec = bf::Spectrum::scaled(64);
  for (auto _ : state) {
    auto inv = bf::build_inventory(p, spec);
    benchmark::DoNotOptimize(inv.counts);
  }
}
BENCHMARK(BM_Inventory)->Arg(16)->Arg(256)->Arg(4096);

void BM_Invariants(benchmark::State& state) {
  const bf::Params p{-200.0, 1.0, 3.0};
  const auto spec = bf::Spectrum::scaled(64);
  for (auto _ : state) {
    for (int a = 1; a < 14; ++a) {
      for (int b = a + 1; b < 15; ++b) benchmark::DoNotOptimize(bf::compute_invariants(p, spec, a, b));
    }
  }
  state.SetItemsProcessed(state.iterations() * 91);
}
BENCHMARK(BM_Invariants);

void BM_GeneralBimodal(benchmark::State& state) {
  const bf::Params p{-static_cast<double>(state.range(0)), 1.0, 3.0};
  const auto spec = bf::Spectrum::scaled(64);
  for (auto _ : state) benchmark::DoNotOptimize(bf::enumerate_general_bimodal(p, spec));
}
BENCHMARK(BM_GeneralBimodal)->Arg(16)->Arg(1024);

void BM_EffectiveModes(benchmark::State& state) {
  const bf::Params p{-1e4, 1.0, 10.0};
  const auto spec = bf::Spectrum::dirichlet(64);
  for (auto _ : state) benchmark::DoNotOptimize(bf::effective_modes(p, spec));
}
BENCHMARK(BM_EffectiveModes);

void BM_Sweep(benchmark::State& state) {
  const bf::Params base{0.0, 1.0, 3.0};
  const auto spec = bf::Spectrum::scaled(64);
  bf::SweepOptions opts;
  opts.load_from = 0.0;
  opts.load_to = 40.0;
  opts.steps = static_cast<int>(state.range(0));
  opts.modes = {1, 2, 3};
  opts.pairs = {{1, 2}, {2, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(bf::sweep(base, spec, opts));
}
BENCHMARK(BM_Sweep)->Arg(100)->Arg(1000);

void BM_Oracle(benchmark::State& state) {
  const bf::Params p{-15.5, 1.0, 3.0};
  const auto spec = bf::Spectrum::scaled(3);
  bf::OracleOptions opts;
  opts.threads = 1;
  const int starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bf::galerkin_solve(p, spec, 3, starts, 6, opts));
  state.SetItemsProcessed(state.iterations() * starts);
}
BENCHMARK(BM_Oracle)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
