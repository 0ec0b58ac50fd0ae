#include <benchmark/benchmark.h>

#include "expander/families.hpp"
#include "expander/fpset.hpp"
#include "expander/freq.hpp"
#include "expander/incidence.hpp"

using namespace expander;

namespace {

FpSet random_set(const FieldPtr& F, std::uint64_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_subset(F, n, rng);
}

void BM_SumsetPairs(benchmark::State& st) {
  const auto F = PrimeField::make(10007);
  const auto A = random_set(F, st.range(0), 1), B = random_set(F, st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(sumset(A, B, SumsetAlgo::Pairs).size());
}
BENCHMARK(BM_SumsetPairs)->RangeMultiplier(4)->Range(16, 1024);

void BM_SumsetRotate(benchmark::State& st) {
  const auto F = PrimeField::make(10007);
  const auto A = random_set(F, st.range(0), 1), B = random_set(F, st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(sumset(A, B, SumsetAlgo::Rotate).size());
}
BENCHMARK(BM_SumsetRotate)->RangeMultiplier(4)->Range(16, 1024);

void BM_Convolve(benchmark::State& st, ConvAlgo algo) {
  const auto F = PrimeField::make(10007);
  const auto a = FreqVector::indicator(random_set(F, st.range(0), 3));
  const auto b = FreqVector::indicator(random_set(F, st.range(0), 4));
  for (auto _ : st) benchmark::DoNotOptimize(additive_convolve(a, b, algo).total());
}
BENCHMARK_CAPTURE(BM_Convolve, ntt, ConvAlgo::Ntt)->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK_CAPTURE(BM_Convolve, schoolbook, ConvAlgo::Schoolbook)->RangeMultiplier(4)->Range(16, 4096);

void BM_ShiftIncidences(benchmark::State& st) {
  const auto F = PrimeField::make(1009);
  const auto A = random_set(F, st.range(0), 5);
  const auto inst = build_shift_construction(A, UniQuad{1, 0, 0});
  for (auto _ : st) benchmark::DoNotOptimize(count_incidences(inst));
  st.counters["points"] = static_cast<double>(inst.points.size());
}
BENCHMARK(BM_ShiftIncidences)->DenseRange(4, 12, 4);

}  // namespace
BENCHMARK_MAIN();
