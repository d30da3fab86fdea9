#include <benchmark/benchmark.h>

#include <salem/cli/suites.hpp>
#include <salem/salem.hpp>

namespace {

using namespace salem;

const IntPoly kP22{1, -27, 0, 4, 3, 24, 15, -7, 1, -14, -2, -5, -2, -14, 1, -7, 15, 24, 3, 4, 0, -27, 1};

void BM_FactorDegree22(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(factor_z(kP22));
}
BENCHMARK(BM_FactorDegree22);

void BM_IsolateRealRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(kP22));
}
BENCHMARK(BM_IsolateRealRoots);

void BM_SalemTest(benchmark::State& state) {
  const Rational width(1, 100000000);
  for (auto _ : state) benchmark::DoNotOptimize(salem_test(kP22, width));
}
BENCHMARK(BM_SalemTest);

void BM_CharPolyRank10(benchmark::State& state) {
  const Isometry f = cli::cone_preserving_word(7);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(f));
}
BENCHMARK(BM_CharPolyRank10);

void BM_PowerMinPoly(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power_min_poly(kP22, n));
}
BENCHMARK(BM_PowerMinPoly)->Arg(2)->Arg(3);

void BM_ComposeSearch(benchmark::State& state) {
  Isometry f = cli::cone_preserving_word(0);
  for (std::uint64_t seed = 0; trace_bound_test(f) != TraceVerdict::kPositive; ++seed) f = cli::cone_preserving_word(seed);
  const Isometry g = cli::quasi_unipotent_word(3);
  for (auto _ : state) benchmark::DoNotOptimize(compose_search(f, g));
}
BENCHMARK(BM_ComposeSearch);

}  // namespace

BENCHMARK_MAIN();
