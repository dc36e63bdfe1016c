#include <random>

#include <benchmark/benchmark.h>

#include "artin/center.hpp"
#include "artin/roots.hpp"

using namespace artin;

namespace {

Word random_word(int rank, std::size_t length, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> letter(1, rank);
  Word w(length);
  for (int& x : w) x = letter(rng);
  return w;
}

void BM_NormalForm(benchmark::State& state, const char* group) {
  ArtinMonoid m(parse_group_spec(group));
  Word w = random_word(m.rank(), static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(m.normal_form(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_NormalForm, A5, "A5")->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK_CAPTURE(BM_NormalForm, D6, "D6")->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_RewritingDecider(benchmark::State& state) {
  ArtinMonoid m(parse_group_spec("A3"));
  Word w = random_word(3, static_cast<std::size_t>(state.range(0)), 11);
  Word v(w.rbegin(), w.rend());
  for (auto _ : state) benchmark::DoNotOptimize(m.equal_positive_bfs(w, v));
}
BENCHMARK(BM_RewritingDecider)->DenseRange(6, 12, 2);

void BM_GroupInverse(benchmark::State& state) {
  ArtinMonoid m(parse_group_spec("B4"));
  GroupElement g = m.element(random_word(4, static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(m.inverse(g));
}
BENCHMARK(BM_GroupInverse)->Range(8, 256);

void BM_RootSearch(benchmark::State& state, const char* group, int k) {
  RootOptions options;
  options.formula_witnesses = false;
  const FamilySpec spec = parse_group_spec(group);
  for (auto _ : state) benchmark::DoNotOptimize(has_kth_root(spec, k, options));
}
BENCHMARK_CAPTURE(BM_RootSearch, A3_k2, "A3", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RootSearch, D4_k2, "D4", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RootSearch, I2_6_k2, "I2(6)", 2)->Unit(benchmark::kMillisecond);

void BM_RootSearchExhaustive(benchmark::State& state) {
  RootOptions options;
  options.formula_witnesses = false;
  options.prune_to_divisors = false;
  const FamilySpec spec = parse_group_spec("A3");
  for (auto _ : state) benchmark::DoNotOptimize(has_kth_root(spec, 2, options));
}
BENCHMARK(BM_RootSearchExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
