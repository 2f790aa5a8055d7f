#include <benchmark/benchmark.h>

#include <random>

#include "invord/extension.hpp"

using namespace invord;

namespace {

Relation denseRandomRelation(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Relation r{Universe(n)};
  std::uniform_int_distribution<int> coin(0, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng) == 0) r.set(i, j);
  return r;
}

PermAction doubleSwapChain(int n) {
  // (0 1)(2 3)...(n-2 n-1)
  std::vector<int> map(n);
  for (int i = 0; i + 1 < n; i += 2) {
    map[i] = i + 1;
    map[i + 1] = i;
  }
  if (n % 2) map[n - 1] = n - 1;
  return generateGroup(Universe(n), {{"g", Permutation(std::move(map))}});
}

Relation ladderOrder(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 3 < n; i += 2) pairs.push_back({i, i + 2}); // i -> i+2
  for (int i = 1; i + 2 < n; i += 2) pairs.push_back({i, i + 2});
  return transitiveClosure(Relation::fromPairs(Universe(n), pairs, true));
}

} // namespace

static void BM_TransitiveClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Relation r = denseRandomRelation(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(transitiveClosure(r));
}
BENCHMARK(BM_TransitiveClosure)->Arg(16)->Arg(32)->Arg(64);

static void BM_LeqG(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PermAction a = doubleSwapChain(n);
  Relation r = ladderOrder(n);
  for (auto _ : state) benchmark::DoNotOptimize(leqG(a, r));
}
BENCHMARK(BM_LeqG)->Arg(8)->Arg(12)->Arg(16);

static void BM_InvariantLinearPreorderExtension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PermAction a = doubleSwapChain(n);
  Relation r = ladderOrder(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(invariantLinearPreorderExtension(a, r));
}
BENCHMARK(BM_InvariantLinearPreorderExtension)->Arg(8)->Arg(12);

static void BM_PowersetPreorder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PermAction a = doubleSwapChain(n);
  for (auto _ : state) benchmark::DoNotOptimize(powersetPreorder(a));
}
BENCHMARK(BM_PowersetPreorder)->Arg(4)->Arg(5);

static void BM_EnumerateLinearExtensions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Relation r = Relation::equality(Universe(n));
  for (auto _ : state) {
    int count = 0;
    enumerateLinearExtensions(r, nullptr, [&](const Relation&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateLinearExtensions)->Arg(6)->Arg(7);
