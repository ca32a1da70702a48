#include <benchmark/benchmark.h>

#include "arcwords/digraph.hpp"
#include "arcwords/experiments.hpp"
#include "arcwords/semigroup.hpp"

using namespace arcwords;

namespace {

  void explore_complete(benchmark::State& state) {
    auto const d = family(Family::complete, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(explore(d));
    }
  }
  BENCHMARK(explore_complete)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

  void explore_pi(benchmark::State& state) {
    auto const d = family(Family::pi, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(explore(d));
    }
  }
  BENCHMARK(explore_pi)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

  void canonical(benchmark::State& state) {
    auto const d = family(Family::pi, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(canonical_form(d));
    }
  }
  BENCHMARK(canonical)->DenseRange(4, 8);

  void strong_tournaments(benchmark::State& state) {
    ClassSpec const spec{ClassKind::strong_tournaments, static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_class(spec));
    }
  }
  BENCHMARK(strong_tournaments)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
