#include "exotica/decompositions.hpp"
#include "exotica/fibration.hpp"
#include "exotica/surgery.hpp"

#include <benchmark/benchmark.h>

namespace {

  using namespace exotica;

  void bm_full_construction(benchmark::State& state) {
    int const n = static_cast<int>(state.range(0));
    int const k = budget_check(n, 0).k_max;
    for (auto _ : state) {
      benchmark::DoNotOptimize(full_construction(n, k, 3));
    }
  }
  BENCHMARK(bm_full_construction)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

  void bm_factor_derivation(benchmark::State& state) {
    int const n = static_cast<int>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(generate_factor_derivation(n));
    }
  }
  BENCHMARK(bm_factor_derivation)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

  void bm_check_factor_derivation(benchmark::State& state) {
    Derivation const d = generate_factor_derivation(static_cast<int>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_derivation(d, bundled_lemmas()));
    }
  }
  BENCHMARK(bm_check_factor_derivation)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

  void bm_multiply(benchmark::State& state) {
    auto const L   = make_surgery_lattice(1, 0, 0);
    auto const f   = CohomologyClass::basis(L, "f");
    auto const odd = SWSeries::monomial(f) - SWSeries::monomial(-f);
    SWSeries   x   = SWSeries::unit(L);
    for (int i = 0; i < state.range(0); ++i) {
      x = x * odd;
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(multiply(x, x));
    }
  }
  BENCHMARK(bm_multiply)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
