// Microbenchmarks for the hot paths: the linear-time classifier and its
// m-scan, the game-tree search on small boards, and notation round-trips.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "cpitch/classifier.hpp"
#include "cpitch/enumerate.hpp"
#include "cpitch/game.hpp"
#include "cpitch/notation.hpp"
#include "cpitch/oracle.hpp"

namespace {

using namespace cpitch;

void BM_Classify(benchmark::State& state) {
  const Board board = random_board(static_cast<std::size_t>(state.range(0)),
                                   /*seed=*/7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(board).outcome);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Classify)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_MStat(benchmark::State& state) {
  const Board board = random_board(static_cast<std::size_t>(state.range(0)),
                                   /*seed=*/7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m_stat(board.left.bumps));
    benchmark::DoNotOptimize(m_stat(board.right.bumps));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MStat)->Arg(1 << 10)->Arg(1 << 20);

void BM_OracleSingleBoard(benchmark::State& state) {
  const Position pos = parse_position("6,2,4,5|4,3,3,4,6");
  for (auto _ : state) {
    Oracle oracle;  // fresh memo each round: measures the full search
    benchmark::DoNotOptimize(oracle.outcome(pos));
  }
}
BENCHMARK(BM_OracleSingleBoard);

void BM_OracleSum(benchmark::State& state) {
  const Position pos = parse_position("2,1|1 + 1|2 + |3");
  for (auto _ : state) {
    Oracle oracle;
    benchmark::DoNotOptimize(oracle.outcome(pos));
  }
}
BENCHMARK(BM_OracleSum);

void BM_ParsePrint(benchmark::State& state) {
  const std::string text = to_string(
      random_board(static_cast<std::size_t>(state.range(0)), /*seed=*/7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_string(parse_board(text)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParsePrint)->Arg(1 << 10)->Arg(1 << 16);

void BM_WinningMoves(benchmark::State& state) {
  const Board board = random_board(64, /*seed=*/11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(winning_moves(board, Player::Left));
  }
}
BENCHMARK(BM_WinningMoves);

}  // namespace

BENCHMARK_MAIN();
