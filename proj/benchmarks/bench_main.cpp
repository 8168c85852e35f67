#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "aitgl/game.hpp"
#include "aitgl/token_labeler.hpp"
#include "aitgl/toy_machine.hpp"
#include "aitgl/trimmer.hpp"

namespace {

using namespace aitgl;

void BM_EnumerateS(benchmark::State& state) {
  auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_S(k, 10000, 16));
  }
}
BENCHMARK(BM_EnumerateS)->Arg(2)->Arg(4)->Arg(6);

void BM_Trim(benchmark::State& state) {
  auto depth = static_cast<std::uint64_t>(state.range(0));
  StringSet s = enumerate_S(3, 10000, depth);
  std::vector<BitString> enumeration = s.members();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trim(enumeration, TrimConfig{3, depth, 10000}));
  }
}
BENCHMARK(BM_Trim)->Arg(4)->Arg(6)->Arg(8);

void BM_TokenReplay(benchmark::State& state) {
  auto depth = static_cast<std::uint64_t>(state.range(0));
  StringSet s = enumerate_S(2, 100000, depth);
  std::vector<BitString> order = s.members();
  std::sort(order.begin(), order.end(), ShortlexLess{});
  TokenBoard board(2);
  for (auto _ : state) {
    board.reset(2);
    for (const BitString& x : order) board.observe(x);
    benchmark::DoNotOptimize(board.tokens_used());
  }
}
BENCHMARK(BM_TokenReplay)->Arg(8)->Arg(32);

void BM_Play(benchmark::State& state) {
  auto horizon = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    AliceStrategy alice(4);
    BlindBob bob(3, 64);
    benchmark::DoNotOptimize(play(4, alice, bob, horizon, 16));
  }
}
BENCHMARK(BM_Play)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
