#include <benchmark/benchmark.h>

#include "motivic/datasets.hpp"
#include "motivic/jets.hpp"
#include "motivic/series.hpp"

using namespace motivic;

static void BM_ZetaConstruction(benchmark::State& state) {
  const ResolutionData res = datasets::cusp();
  for (auto _ : state) benchmark::DoNotOptimize(zeta_equivariant(res));
}
BENCHMARK(BM_ZetaConstruction);

static void BM_SeriesExpansion(benchmark::State& state) {
  const RationalSeries z = zeta_equivariant(datasets::cusp());
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand(z, order));
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesExpansion)->Range(8, 256)->Complexity();

static void BM_BlowupAndEquality(benchmark::State& state) {
  const ResolutionData res = datasets::cusp();
  const RationalSeries z = zeta_equivariant(res);
  for (auto _ : state) {
    const ResolutionData up = blowup(res, {1, 3});
    benchmark::DoNotOptimize(rs_equal(z, zeta_equivariant(up)));
  }
}
BENCHMARK(BM_BlowupAndEquality);

static void BM_JetEnumeration(benchmark::State& state) {
  const IntPolynomial f = IntPolynomial::parse("x^2+y^3");
  const uint32_t q = static_cast<uint32_t>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_contact_loci(f, q, d, kDefaultGuard, 1));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(std::pow(q, 2.0 * (d + 1))));
}
BENCHMARK(BM_JetEnumeration)->Args({3, 3})->Args({5, 3})->Args({7, 2});

static void BM_JetEnumerationParallel(benchmark::State& state) {
  const IntPolynomial f = IntPolynomial::parse("x^2+y^3");
  for (auto _ : state)
    benchmark::DoNotOptimize(count_contact_loci(f, 7, 3, kDefaultGuard, 0));
}
BENCHMARK(BM_JetEnumerationParallel);

static void BM_SingularSeries(benchmark::State& state) {
  const ResolutionData res = datasets::cusp();
  std::map<int, int> mu;
  for (const auto& d : res.divisors) mu[d.id] = d.xi - d.N;
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(local_singular_series(res, mu, d));
}
BENCHMARK(BM_SingularSeries)->Arg(12)->Arg(48);

BENCHMARK_MAIN();
