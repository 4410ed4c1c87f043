#include <benchmark/benchmark.h>

#include "mcw/coloring.hpp"
#include "mcw/generators.hpp"
#include "mcw/indpoly.hpp"
#include "mcw/treedec.hpp"

using namespace mcw;

static void BM_IndpolyBand(benchmark::State& state) {
  const Expr e = gen::band(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(run(e));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IndpolyBand)->RangeMultiplier(2)->Range(125, 1000)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_IndpolyJoin(benchmark::State& state) {
  const auto method = state.range(0) == 0 ? JoinMethod::school : JoinMethod::transform;
  const Expr e = gen::grid(4, 40);
  for (auto _ : state) benchmark::DoNotOptimize(run(e, method));
}
BENCHMARK(BM_IndpolyJoin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_MaxIsBand(benchmark::State& state) {
  const Expr e = gen::band(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(max_is(e));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxIsBand)->RangeMultiplier(2)->Range(125, 1000)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

static void BM_ColorLadder(benchmark::State& state) {
  const Expr e = gen::grid(2, static_cast<std::size_t>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(colorable(e, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ColorLadder)->RangeMultiplier(2)->Range(125, 1000)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

static void BM_ColorJoin(benchmark::State& state) {
  ColoringOptions opt;
  opt.join = state.range(0) == 0 ? ColorJoinMethod::direct : ColorJoinMethod::transform;
  const Expr e = gen::grid(3, 30);
  for (auto _ : state) benchmark::DoNotOptimize(colorable(e, 3, opt));
}
BENCHMARK(BM_ColorJoin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CompileGrid(benchmark::State& state) {
  const auto td = gen::grid_decomposition(4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compile(semi_smooth(td)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CompileGrid)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
