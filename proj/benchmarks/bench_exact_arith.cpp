#include <benchmark/benchmark.h>

#include "nagell/exact_arith.hpp"

namespace {

nagell::Integer random_bits(unsigned long bits) {
  static gmp_randclass rng(gmp_randinit_mt);
  return rng.get_z_bits(bits) | (nagell::Integer(1) << (bits - 1));
}

void BM_isqrt(benchmark::State& state) {
  const auto n = random_bits(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nagell::isqrt(n));
}
BENCHMARK(BM_isqrt)->RangeMultiplier(4)->Range(64, 16384);

// Reference point: GMP's own square root.
void BM_mpz_sqrt(benchmark::State& state) {
  const auto n = random_bits(static_cast<unsigned long>(state.range(0)));
  nagell::Integer r;
  for (auto _ : state) {
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_mpz_sqrt)->RangeMultiplier(4)->Range(64, 16384);

void BM_is_perfect_square_nonsquare(benchmark::State& state) {
  const auto n = random_bits(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nagell::is_perfect_square(n));
}
BENCHMARK(BM_is_perfect_square_nonsquare)->RangeMultiplier(4)->Range(64, 16384);

void BM_is_perfect_square_square(benchmark::State& state) {
  const auto r = random_bits(static_cast<unsigned long>(state.range(0)) / 2);
  const nagell::Integer n = r * r;
  for (auto _ : state) benchmark::DoNotOptimize(nagell::is_perfect_square(n));
}
BENCHMARK(BM_is_perfect_square_square)->RangeMultiplier(4)->Range(64, 16384);

void BM_cmp_scaled_power(benchmark::State& state) {
  const nagell::Integer v = random_bits(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nagell::cmp_scaled_power(2, 3, static_cast<unsigned long>(state.range(0)), 200, v));
  }
}
BENCHMARK(BM_cmp_scaled_power)->Arg(256)->Arg(4096);

}  // namespace
