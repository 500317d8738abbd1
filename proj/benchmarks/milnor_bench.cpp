#include <benchmark/benchmark.h>

#include "hmc/corpus.hpp"
#include "hmc/milnor.hpp"

namespace {

void BM_AssembleCorpus(benchmark::State& state, const char* name) {
  const hmc::Arrangement a = hmc::corpus_arrangement(name);
  hmc::AssembleOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hmc::assemble(a, {}, opt).cross_path_ok);
}
BENCHMARK_CAPTURE(BM_AssembleCorpus, concurrent3, "concurrent3")->Arg(1);
BENCHMARK_CAPTURE(BM_AssembleCorpus, fourplanes, "fourplanes")->Arg(1)->Arg(4);
BENCHMARK_CAPTURE(BM_AssembleCorpus, sixlines_a, "sixlines_a")->Arg(1)->Arg(4);

void BM_Calibrate(benchmark::State& state) {
  const auto suite = hmc::calibration_suite();
  for (auto _ : state) benchmark::DoNotOptimize(hmc::calibrate(suite).chosen);
}
BENCHMARK(BM_Calibrate)->Unit(benchmark::kMillisecond);

}  // namespace
