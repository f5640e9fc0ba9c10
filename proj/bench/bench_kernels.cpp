// Serial reference checkers and engines against the OpenMP versions.
//
//   build/bench/mayskit_bench --benchmark_filter=Monotone

#include <benchmark/benchmark.h>

#include "mayskit/mays.hpp"
#include "mayskit/properties.hpp"
#include "mayskit/refute.hpp"

using namespace mayskit;

namespace {

// Majority passes everything, so every check scans the whole profile space.
const Rule& majority_table(VoterCount n) {
  static std::vector<Rule> cache;
  while (cache.size() <= n) cache.push_back(majority_as_table(cache.size()));
  return cache[n];
}

template <AxiomReport (*Check)(const Rule&, const Limits&)>
void serial_check(benchmark::State& state) {
  const Rule& r = majority_table(static_cast<VoterCount>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Check(r, Limits{}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pow3(r.voters())));
}

template <AxiomReport (*Check)(const Rule&, const ExecOptions&, const Limits&)>
void parallel_check(benchmark::State& state) {
  const Rule& r = majority_table(static_cast<VoterCount>(state.range(0)));
  const ExecOptions exec{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(Check(r, exec, Limits{}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pow3(r.voters())));
}

void BM_AnonymousSerial(benchmark::State& s) { serial_check<reference::check_anonymous>(s); }
void BM_AnonymousParallel(benchmark::State& s) { parallel_check<check_anonymous>(s); }
void BM_NeutralSerial(benchmark::State& s) { serial_check<reference::check_neutral>(s); }
void BM_NeutralParallel(benchmark::State& s) { parallel_check<check_neutral>(s); }
void BM_MonotoneSerial(benchmark::State& s) { serial_check<reference::check_monotone>(s); }
void BM_MonotoneParallel(benchmark::State& s) { parallel_check<check_monotone>(s); }

void BM_FullEngineSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::verify_biconditional_exhaustive(2));
}

void BM_FullEngineParallel(benchmark::State& state) {
  const ExecOptions exec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(verify_biconditional_exhaustive(2, exec));
}

void BM_AnonymousEngineSerial(benchmark::State& state) {
  const auto n = static_cast<VoterCount>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::verify_anonymous_restricted(n));
}

void BM_AnonymousEngineParallel(benchmark::State& state) {
  const auto n = static_cast<VoterCount>(state.range(0));
  const ExecOptions exec{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(verify_anonymous_restricted(n, exec));
}

void BM_RefuteAllN2(benchmark::State& state) {
  std::vector<Rule> rules;
  for (const Rule& r : enumerate_all_rules(2)) rules.push_back(r);
  const ExecOptions exec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(refute_many(rules, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rules.size()));
}

}  // namespace

BENCHMARK(BM_AnonymousSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnonymousParallel)->ArgsProduct({{6, 7, 8}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeutralSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeutralParallel)->ArgsProduct({{8, 9, 10}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonotoneSerial)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonotoneParallel)->ArgsProduct({{7, 8, 9}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullEngineSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullEngineParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnonymousEngineSerial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnonymousEngineParallel)->ArgsProduct({{3, 4}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefuteAllN2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
