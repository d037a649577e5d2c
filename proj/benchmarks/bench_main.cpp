#include <benchmark/benchmark.h>

#include "fgkit/hybrid.hpp"
#include "fgkit/pb_f2.hpp"
#include "fgkit/whitehead_algorithm.hpp"

namespace {

using namespace fgkit;

std::vector<Word> inputs(std::size_t n, int rank, std::size_t count) {
  Rng rng(n * 7919 + static_cast<std::size_t>(rank));
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_cyclically_reduced(n, rank, rng));
  return out;
}

void BM_Decide(benchmark::State& state, Strategy strategy) {
  static const FixedTarget t = precompute(Word::parse("ab"), 2);
  const auto words = inputs(static_cast<std::size_t>(state.range(0)), 2, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(t, words[i++ % words.size()], strategy));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Decide, race, Strategy::race)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();
BENCHMARK_CAPTURE(BM_Decide, full, Strategy::full)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_BlockerScan(benchmark::State& state) {
  const Word blocker = orbit_blocker(Word::parse("ab"), 2).product;
  const auto words = inputs(static_cast<std::size_t>(state.range(0)), 2, 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(scan_for_blocker(words[i++ % words.size()], blocker));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_BlockerScan)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_Minimize(benchmark::State& state) {
  const auto words = inputs(static_cast<std::size_t>(state.range(0)), 3, 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(words[i++ % words.size()], 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(1 << 6, 1 << 12)->Complexity();

void BM_PbF2(benchmark::State& state) {
  const auto words = inputs(static_cast<std::size_t>(state.range(0)), 2, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_pb_f2(words[i++ % words.size()]));
}
BENCHMARK(BM_PbF2)->RangeMultiplier(8)->Range(8, 1 << 12);

}  // namespace

BENCHMARK_MAIN();
