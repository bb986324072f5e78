#include <benchmark/benchmark.h>

#include <random>

#include "subsum/binary.h"
#include "subsum/subsum.h"

using namespace subsum;

namespace {

void BM_NumStarNaive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(num_star(state.range(0), PartFamily::all(), NumStarStrategy::Naive));
}
BENCHMARK(BM_NumStarNaive)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);

void BM_NumStarPartDP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(num_star(state.range(0), PartFamily::all(), NumStarStrategy::PartDP));
}
BENCHMARK(BM_NumStarPartDP)->DenseRange(10, 22, 4)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_BigGOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(big_g(state.range(0), PartFamily::all(), GStrategy::Oracle));
}
BENCHMARK(BM_BigGOracle)->DenseRange(10, 25, 5)->Unit(benchmark::kMillisecond);

void BM_BigGClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(big_g(state.range(0), PartFamily::all(), GStrategy::ClosedForm));
}
BENCHMARK(BM_BigGClosedForm)->DenseRange(10, 25, 5)->Arg(1000);

void BM_NumBNaive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(num_b(state.range(0), NumBStrategy::Naive));
}
BENCHMARK(BM_NumBNaive)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_NumBRecurrence(benchmark::State& state) {
  // the memo would turn every iteration after the first into a lookup
  for (auto _ : state) {
    clear_binary_caches();
    benchmark::DoNotOptimize(num_b(state.range(0), NumBStrategy::Recurrence));
  }
}
BENCHMARK(BM_NumBRecurrence)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

DensePoly random_poly(std::size_t size, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> c(size);
  for (auto& v : c) {
    v = static_cast<unsigned long>(rng());
    v <<= 64;
    v += static_cast<unsigned long>(rng());
  }
  return DensePoly(std::move(c));
}

void BM_MulSchoolbook(benchmark::State& state) {
  const auto a = random_poly(static_cast<std::size_t>(state.range(0)), 1);
  const auto b = random_poly(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(poly_mul_schoolbook(a, b));
}
BENCHMARK(BM_MulSchoolbook)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_MulKaratsuba(benchmark::State& state) {
  const auto a = random_poly(static_cast<std::size_t>(state.range(0)), 1);
  const auto b = random_poly(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(poly_mul_karatsuba(a, b));
}
BENCHMARK(BM_MulKaratsuba)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
