#include <benchmark/benchmark.h>

#include "altdes/divisibility.hpp"
#include "altdes/recurrences.hpp"

namespace {

void BM_FiveTerm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(altdes::five_term(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FiveTerm)->Arg(50)->Arg(100)->Arg(200);

void BM_QuadraticTq(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(altdes::quadratic_tq(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuadraticTq)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_FaaDiBruno(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(altdes::faa_di_bruno_altmaj(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FaaDiBruno)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ExtractEhat(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(altdes::extract_Ehat(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExtractEhat)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
