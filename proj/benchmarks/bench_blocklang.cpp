#include <benchmark/benchmark.h>

#include <random>

#include "blocklang/automata.hpp"
#include "blocklang/cover.hpp"
#include "blocklang/langops.hpp"
#include "blocklang/synthesis.hpp"
#include "blocklang/witness.hpp"

using namespace blocklang;

namespace {

Bitmap random_bitmap(std::uint32_t k, std::uint32_t ell, std::uint64_t seed) {
  const BlockParams p(k, ell);
  std::mt19937_64 rng(seed);
  BitVector bits(p.universe_size());
  for (std::uint64_t i = 0; i < bits.size(); ++i) bits.set(i, rng() & 1);
  bits.set(0);
  return Bitmap(p, std::move(bits));
}

void BM_MinDfaRandom(benchmark::State& state) {
  const auto ell = static_cast<std::uint32_t>(state.range(0));
  const Bitmap b = random_bitmap(2, ell, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bitmap_to_min_dfa(b));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * b.size()));
}
BENCHMARK(BM_MinDfaRandom)->DenseRange(8, 20, 4);

void BM_MinDfaMaxWitness(benchmark::State& state) {
  const Bitmap b = max_witness(static_cast<std::uint32_t>(state.range(0))).bitmap;
  for (auto _ : state) benchmark::DoNotOptimize(bitmap_to_min_dfa(b));
}
BENCHMARK(BM_MinDfaMaxWitness)->DenseRange(8, 16, 4);

void BM_AutomatonToBitmap(benchmark::State& state) {
  const RankedAutomaton a = bitmap_to_min_dfa(random_bitmap(2, static_cast<std::uint32_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(automaton_to_bitmap(a));
}
BENCHMARK(BM_AutomatonToBitmap)->DenseRange(8, 16, 4);

void BM_MinNfa(benchmark::State& state) {
  const Bitmap b = random_bitmap(2, static_cast<std::uint32_t>(state.range(0)), 3);
  const NfaOptions opts{.solver = state.range(1) ? CoverStrategy::Exact : CoverStrategy::Greedy,
                        .budget = 1'000'000};
  for (auto _ : state) benchmark::DoNotOptimize(bitmap_to_min_nfa(b, opts));
}
BENCHMARK(BM_MinNfa)->ArgsProduct({{4, 5, 6}, {0, 1}});

void BM_ReverseShuffle(benchmark::State& state) {
  const Bitmap b = random_bitmap(2, static_cast<std::uint32_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(reverse_bitmap(b));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * b.size()));
}
BENCHMARK(BM_ReverseShuffle)->DenseRange(8, 22, 2);

void BM_ReverseIndexPermutation(benchmark::State& state) {
  const Bitmap b = random_bitmap(2, static_cast<std::uint32_t>(state.range(0)), 4);
  const BlockParams& p = b.params();
  for (auto _ : state) {
    BitVector out(b.size());
    for (std::uint64_t i = b.bits().find_first(); i < b.size(); i = b.bits().find_next(i + 1))
      out.set(word_to_index(reversed(index_to_word(i, p)), p));
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * b.size()));
}
BENCHMARK(BM_ReverseIndexPermutation)->DenseRange(8, 16, 4);

CoverInstance random_cover(std::size_t width, std::size_t targets, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BitVector> ts, cs;
  for (std::size_t i = 0; i < targets; ++i) {
    BitVector t(width);
    for (std::size_t j = 0; j < width; ++j) t.set(j, rng() & 1);
    ts.push_back(t);
  }
  for (const auto& a : ts)
    for (const auto& b : ts) cs.push_back(a & b);
  for (std::size_t j = 0; j < width; ++j) {
    BitVector v(width);
    v.set(j);
    cs.push_back(v);
  }
  return make_cover_instance(width, ts, cs);
}

void BM_MinCover(benchmark::State& state) {
  const CoverInstance inst = random_cover(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 5);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const CoverSolution s = min_cover(inst);
    nodes = s.nodes;
    benchmark::DoNotOptimize(s);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_MinCover)->Args({8, 4})->Args({8, 8})->Args({8, 12})->Args({16, 4})->Args({16, 8});

void BM_GreedyCover(benchmark::State& state) {
  const CoverInstance inst = random_cover(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_cover(inst));
}
BENCHMARK(BM_GreedyCover)->ArgsProduct({{8, 16}, {4, 8, 12}});

}  // namespace

BENCHMARK_MAIN();
