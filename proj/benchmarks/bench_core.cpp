#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "oneone/catalog.hpp"
#include "oneone/covering.hpp"
#include "oneone/cyclicpres.hpp"
#include "oneone/intlinalg.hpp"
#include "oneone/knot.hpp"
#include "oneone/words.hpp"

using namespace oneone;

// Relation matrix of the trefoil's n-fold covering: circulant with three
// nonzero entries per row.
static void BM_SmithNormalFormCirculant(benchmark::State& state) {
  const auto n = state.range(0);
  const IntMatrix m = relation_matrix(sieradski(n));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalFormCirculant)->RangeMultiplier(2)->Range(8, 128);

static void BM_SmithNormalFormDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> v(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalFormDense)->RangeMultiplier(2)->Range(4, 32);

// analyze + monodromies + cyclic word + abelianization for t(k, hk + 1).
static void BM_TorusPipeline(benchmark::State& state) {
  const TorusParams tp{state.range(0), state.range(1), KnotSign::Plus};
  const std::int64_t n = 16;
  for (auto _ : state) {
    const auto k = analyze(torus_mcg(tp));
    for (const auto& m : covering_monodromies(k, n)) {
      const auto p = cyclic_word(k, m);
      benchmark::DoNotOptimize(abelianization(p));
    }
  }
}
BENCHMARK(BM_TorusPipeline)->Args({2, 1})->Args({3, 2})->Args({5, 3})->Args({8, 4});

static void BM_ApplyMcgLongWord(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> t(0, 2), e(-3, 3);
  std::vector<Syllable<Twist>> raw;
  for (int i = 0; i < state.range(0); ++i) {
    const int x = e(rng);
    raw.push_back({static_cast<Twist>(t(rng)), x == 0 ? 1 : x});
  }
  const MCGWord psi(std::span<const Syllable<Twist>>{raw});
  for (auto _ : state) benchmark::DoNotOptimize(analyze(psi));
}
BENCHMARK(BM_ApplyMcgLongWord)->RangeMultiplier(2)->Range(4, 32);

static void BM_Reduce(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> g(0, 2), e(-2, 2);
  std::vector<Syllable<Loop>> raw;
  for (int i = 0; i < state.range(0); ++i) raw.push_back({static_cast<Loop>(g(rng)), e(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(reduce<Loop>(raw));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(8)->Range(64, 1 << 15);

BENCHMARK_MAIN();
