#include <benchmark/benchmark.h>

#include <random>

#include "kmm/balanced.hpp"
#include "kmm/bounds.hpp"
#include "kmm/fixtures.hpp"
#include "kmm/symmetric.hpp"

using namespace kmm;

namespace {

std::vector<Amplitude> gaussian(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Amplitude> v(size);
  for (auto& a : v) a = {g(rng), g(rng)};
  return v;
}

void BM_BlochFromState(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto psi = StateVector::normalized(n, gaussian(std::size_t{1} << n, 1));
  for (auto _ : st) benchmark::DoNotOptimize(bloch_from_state(psi));
}
BENCHMARK(BM_BlochFromState)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_IsKmm(benchmark::State& st) {
  const auto r = bloch_from_state(fixture("m6_phi_plus").state);
  for (auto _ : st) benchmark::DoNotOptimize(is_k_mm(r, 3));
}
BENCHMARK(BM_IsKmm);

void BM_TauMatrix(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto lam = LambdaIndex::make(n - n / 2 - n / 4, n / 4, n / 4, n / 2 - n / 4);
  for (auto _ : st) benchmark::DoNotOptimize(tau_matrix(lam));
}
BENCHMARK(BM_TauMatrix)->Arg(8)->Arg(16)->Arg(31);

void BM_LambdaComponents(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto s = SymmetricState::normalized(n, gaussian(static_cast<std::size_t>(n) + 1, 2));
  for (auto _ : st) benchmark::DoNotOptimize(lambda_components(s));
}
BENCHMARK(BM_LambdaComponents)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MajoranaRoundTrip(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto s = SymmetricState::normalized(n, gaussian(static_cast<std::size_t>(n) + 1, 3));
  for (auto _ : st) benchmark::DoNotOptimize(dicke_from_majorana(majorana_from_dicke(s)));
}
BENCHMARK(BM_MajoranaRoundTrip)->Arg(4)->Arg(10)->Arg(20);

void BM_Closure(benchmark::State& st) {
  const auto gens = five_qubit_code_stabilizers();
  for (auto _ : st) benchmark::DoNotOptimize(close(gens));
}
BENCHMARK(BM_Closure);

void BM_BoundsChart(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bounds_chart(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_BoundsChart)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
