// Throughput of the verification suites and of the endomorphism-level
// operations they are built from.

#include <benchmark/benchmark.h>

#include "bicyclic/endomorphism.hpp"
#include "bicyclic/enumeration.hpp"
#include "bicyclic/green.hpp"
#include "bicyclic/verify.hpp"

using namespace bicyclic;

static void BM_Suite(benchmark::State& state, std::string_view suite, BoundsOverride bounds) {
  std::uint64_t cases = 0;
  for (auto _ : state) {
    const VerifyReport r = run_suite(suite, bounds);
    cases += r.cases_run;
    benchmark::DoNotOptimize(r.failure_count);
  }
  state.counters["cases/s"] = benchmark::Counter(static_cast<double>(cases), benchmark::Counter::kIsRate);
}

BENCHMARK_CAPTURE(BM_Suite, semigroup_axioms_N6, "semigroup_axioms", BoundsOverride{.bound = 6})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, semigroup_axioms_N8, "semigroup_axioms", BoundsOverride{.bound = 8})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, endo_homomorphism, "endo_homomorphism", BoundsOverride{})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, composition_table, "composition_table", BoundsOverride{})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, green_agreement, "green_agreement", BoundsOverride{})
    ->Unit(benchmark::kMillisecond);

static void BM_ComposeAll(benchmark::State& state) {
  const auto endos = enumerate_endos(state.range(0));
  for (auto _ : state) {
    for (const InjEndo& a : endos) {
      for (const InjEndo& b : endos) benchmark::DoNotOptimize(compose(a, b));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(endos.size() * endos.size()));
}
BENCHMARK(BM_ComposeAll)->Arg(5)->Arg(12);

static void BM_GreenSearch(benchmark::State& state) {
  const GreenQuery q{GreenRelation::J, make_beta(4, 1), make_beta(4, 3), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(green_bounded_search(q).related);
}
BENCHMARK(BM_GreenSearch)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
