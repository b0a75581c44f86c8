#include <benchmark/benchmark.h>

#include "braidrep/irreducibility.hpp"
#include "braidrep/sampling.hpp"

using namespace braidrep;

namespace {

SpecializedRep<Rational> rep_for(int n) {
  return collect(singular_extension<Rational>(n, {Rational(3), Rational(-1)}, Rational(2), false), Rational(2));
}

GridSpec grid_for(int n) {
  Sampler rng(7);
  GridSpec g{{n}, {1, 2, -1, Rational(3, 2)}, {}};
  while (g.acs.size() < 8) {
    const Rational a = rng.rational(), c = rng.rational();
    bool ok = true;
    for (const auto& t0 : g.ts) ok = ok && sgn(a * a - t0 * c * c) != 0;
    if (ok) g.acs.emplace_back(a, c);
  }
  return g;
}

void BM_SpanSerial(benchmark::State& st) {
  const auto rep = rep_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(burnside_span_serial(rep));
}

void BM_SpanParallel(benchmark::State& st) {
  const auto rep = rep_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(burnside_span(rep));
}

void BM_GridSerial(benchmark::State& st) {
  const auto g = grid_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(grid_report_serial(g));
}

void BM_GridParallel(benchmark::State& st) {
  const auto g = grid_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(grid_report(g));
}

}  // namespace

BENCHMARK(BM_SpanSerial)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanParallel)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
