// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "nonfree/search.hpp"

namespace {

using nonfree::Rational;
using nonfree::SearchQuery;
using nonfree::SignMode;

SearchQuery query_9_4() { return SearchQuery{Rational(9, 4), 5, 14, SignMode::NonzeroAny, 1000}; }

void BM_SearchSerial(benchmark::State& state) {
  SearchQuery q = query_9_4();
  for (auto _ : state) benchmark::DoNotOptimize(nonfree::search_half_relations_serial(q));
}
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  SearchQuery q = query_9_4();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonfree::search_half_relations(q, workers));
}
BENCHMARK(BM_SearchParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Len4Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nonfree::search_len4_positive_serial(2, 500, 10000));
}
BENCHMARK(BM_Len4Serial)->Unit(benchmark::kMillisecond);

void BM_Len4Parallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonfree::search_len4_positive(2, 500, 10000, workers));
  }
}
BENCHMARK(BM_Len4Parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
