// Serial vs OpenMP timings for the calculus sweeps on catalogue row 1.

#include <benchmark/benchmark.h>

#include "skew3/calculus.hpp"
#include "skew3/smooth.hpp"

using namespace skew3;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_Integrability(benchmark::State& state) {
  const AlgebraSpec& s = preset("1").spec;
  const auto degree = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    const Ring ring(s);  // fresh product cache per iteration
    const auto t = build_automorphisms(ring);
    benchmark::DoNotOptimize(integrability_check(ring, t, IntegralData::standard(s), degree, exec_of(state)));
  }
}

void BM_Connectedness(benchmark::State& state) {
  const AlgebraSpec& s = preset("1").spec;
  const auto degree = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    const Ring ring(s);
    benchmark::DoNotOptimize(connectedness_check(ring, degree, exec_of(state)));
  }
}

void BM_Catalogue(benchmark::State& state) {
  auto opt = VerifyOptions::with_degree(static_cast<std::uint32_t>(state.range(1)));
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(table1(opt));
}

}  // namespace

BENCHMARK(BM_Integrability)->ArgsProduct({{0, 1}, {2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Connectedness)->ArgsProduct({{0, 1}, {3, 5}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Catalogue)->ArgsProduct({{0, 1}, {3}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
