#include <benchmark/benchmark.h>

#include <thread>

#include "raboter/closedform.hpp"
#include "raboter/oracle.hpp"
#include "raboter/recurrence.hpp"

namespace {

void BM_RecurrenceTable(benchmark::State& state) {
  const auto base = static_cast<unsigned>(state.range(0));
  const auto power = static_cast<unsigned>(state.range(1));
  const auto max_k = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    auto table = raboter::compute_moments(base, power, max_k);
    benchmark::DoNotOptimize(table.total(power, max_k));
  }
}
BENCHMARK(BM_RecurrenceTable)->Args({2, 2, 50})->Args({10, 3, 50})->Args({10, 8, 200})->Args({50, 8, 200});

void BM_BruteMoment(benchmark::State& state) {
  raboter::MomentQuery query{static_cast<unsigned>(state.range(0)), 2, static_cast<unsigned>(state.range(1)), {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(raboter::brute_moment(query));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(query.count().get_ui()));
}
BENCHMARK(BM_BruteMoment)->Args({2, 12})->Args({5, 6})->Args({10, 4});

void BM_BruteMomentParallel(benchmark::State& state) {
  raboter::MomentQuery query{5, 2, 7, {}};
  const unsigned partitions = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(raboter::brute_moment_parallel(query, partitions));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(query.count().get_ui()));
}
BENCHMARK(BM_BruteMomentParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime();

void BM_SumPowers(benchmark::State& state) {
  const auto base = static_cast<unsigned>(state.range(0));
  const auto power = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto result = raboter::sum_powers(base, power);
    benchmark::DoNotOptimize(result.verdict.status);
  }
}
BENCHMARK(BM_SumPowers)->Args({2, 2})->Args({2, 4})->Args({7, 2})->Args({12, 3});

}  // namespace
BENCHMARK_MAIN();
