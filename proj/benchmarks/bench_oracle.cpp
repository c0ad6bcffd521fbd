#include <benchmark/benchmark.h>

#include "altdes/oracle.hpp"

namespace {

void BM_BruteAltEulerian(benchmark::State& state) {
  altdes::OracleConfig cfg;
  cfg.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(altdes::brute_alt_eulerian(static_cast<int>(state.range(0)), cfg));
}
BENCHMARK(BM_BruteAltEulerian)->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

void BM_BruteQalt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(altdes::brute_qalt(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteQalt)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
