// SPDX-License-Identifier: Apache-2.0
#include <complex>

#include <benchmark/benchmark.h>

#include "mtf/krylov.hpp"
#include "mtf/modal.hpp"
#include "mtf/scenarios.hpp"
#include "mtf/specfun.hpp"
#include "mtf/symbols.hpp"

namespace {

void BM_RiccatiTable(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::specfun::riccati_table(n, {419.0, 0.0}));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_RiccatiTable)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_MtfSymbol(benchmark::State& state)
{
  const auto media = mtf::get_scenario("ferrite-hf").media;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::symbols::mtf_symbol(n, media));
  }
}
BENCHMARK(BM_MtfSymbol)->Arg(10)->Arg(100)->Arg(500);

void BM_SpectrumScan(benchmark::State& state)
{
  const auto media = mtf::get_scenario("teflon-vhf").media;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::modal::spectrum_scan(media, mtf::Variant::mtf, n));
  }
}
BENCHMARK(BM_SpectrumScan)->Arg(150)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_GmresPrecondCompare(benchmark::State& state)
{
  const auto s = mtf::get_scenario(state.range(0) == 0 ? "teflon-hf" : "ferrite-hf");
  const int n = mtf::default_truncation(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtf::krylov::precond_compare(s.media, n));
  }
}
BENCHMARK(BM_GmresPrecondCompare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
