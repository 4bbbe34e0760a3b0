#include <benchmark/benchmark.h>

#include "k3le/nef_search.hpp"
#include "k3le/theta.hpp"

using namespace k3le;

namespace {

nef::SearchConfig search_config(int threads) {
  nef::SearchConfig c;
  c.max_k = 1000;
  c.thread_count = threads;
  return c;
}

void BM_SearchSerial(benchmark::State& state) {
  const nef::SearchConfig cfg = search_config(1);
  for (auto _ : state) benchmark::DoNotOptimize(nef::search_serial(cfg).tuples_visited);
}

void BM_SearchParallel(benchmark::State& state) {
  const nef::SearchConfig cfg = search_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nef::search(cfg).tuples_visited);
}

void BM_ThetaSerial(benchmark::State& state) {
  const GramLattice e7 = builtin_gram(std::string_view("E7"));
  for (auto _ : state) benchmark::DoNotOptimize(theta::representation_number_serial(e7, state.range(0)));
}

void BM_ThetaParallel(benchmark::State& state) {
  const GramLattice e7 = builtin_gram(std::string_view("E7"));
  for (auto _ : state) benchmark::DoNotOptimize(theta::representation_number(e7, state.range(0), 4));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaParallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
