#include <benchmark/benchmark.h>

#include "nagell/solver.hpp"

namespace {

void BM_finite_scan(benchmark::State& state) {
  const auto sc = nagell::make_subcase(nagell::EquationSpec(2, nagell::IntPoly{-7}, 0), 1);
  const long hi = state.range(0);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(nagell::finite_scan(sc, 0, hi, jobs));
  state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK(BM_finite_scan)->Args({500, 1})->Args({2500, 1})->Args({2500, 4});

void BM_solve_base3(benchmark::State& state) {
  const nagell::EquationSpec spec(3, nagell::IntPoly{0, 1, 0, 1}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nagell::solve(spec));
}
BENCHMARK(BM_solve_base3);

void BM_solve_triangular(benchmark::State& state) {
  const auto spec = nagell::triangular_transform(state.range(0) ? 1 : -1).first;
  for (auto _ : state) benchmark::DoNotOptimize(nagell::solve(spec));
}
BENCHMARK(BM_solve_triangular)->Arg(0)->Arg(1);

void BM_brute_oracle(benchmark::State& state) {
  const nagell::EquationSpec spec(2, nagell::IntPoly{-7}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nagell::brute_oracle(spec, state.range(0)));
}
BENCHMARK(BM_brute_oracle)->Arg(200)->Arg(1000);

}  // namespace
