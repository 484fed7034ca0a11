#include <benchmark/benchmark.h>

#include "dcs/dcs.hpp"

namespace {

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dcs::sieve_primes(limit).count());
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_CesNorm(benchmark::State& state) {
  dcs::Rng rng(1);
  const auto a = dcs::random_coeffs(rng, {64, static_cast<std::uint64_t>(state.range(0)), true, false});
  const dcs::Exponent e(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(dcs::ces_norm(a, e));
}
BENCHMARK(BM_CesNorm)->Arg(1000)->Arg(100'000);

void BM_Convolve(benchmark::State& state) {
  dcs::Rng rng(2);
  const dcs::SampleShape shape{static_cast<std::size_t>(state.range(0)), 100'000, true, false};
  const dcs::DirichletPoly f(dcs::random_coeffs(rng, shape)), g(dcs::random_coeffs(rng, shape));
  const auto limit = dcs::full_product_limit(f, g);
  for (auto _ : state) benchmark::DoNotOptimize(dcs::convolve(f, g, limit));
}
BENCHMARK(BM_Convolve)->Arg(64)->Arg(1024);

void BM_Jagers(benchmark::State& state) {
  dcs::Rng rng(3);
  const auto b = dcs::random_coeffs(rng, {static_cast<std::size_t>(state.range(0)), 1000, true, false});
  const dcs::Exponent e(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(dcs::jagers_dual_norm(b, e).norm);
}
BENCHMARK(BM_Jagers)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
