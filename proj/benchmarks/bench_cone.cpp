#include <benchmark/benchmark.h>

#include <random>

#include "invord/cone.hpp"

using namespace invord;

namespace {

ConeOrder randomCone(int k, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::vector<IntVector> gens;
  while (static_cast<int>(gens.size()) < m) {
    IntVector v(k);
    bool zero = true;
    for (int j = 0; j < k; ++j) {
      v[j] = entry(rng);
      if (v[j]) zero = false;
    }
    if (!zero) gens.push_back(std::move(v));
  }
  return ConeOrder(k, std::move(gens));
}

ConeOrder orthant(int k) {
  std::vector<IntVector> gens;
  for (int j = 0; j < k; ++j) {
    IntVector e(k, 0);
    e[j] = 1;
    gens.push_back(std::move(e));
  }
  return ConeOrder(k, std::move(gens));
}

} // namespace

static void BM_GordanCertificate(benchmark::State& state) {
  ConeOrder c = randomCone(static_cast<int>(state.range(0)), 8, 7);
  for (auto _ : state) benchmark::DoNotOptimize(gordanCertificate(c));
}
BENCHMARK(BM_GordanCertificate)->Arg(2)->Arg(4)->Arg(6);

static void BM_ConeMember(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ConeOrder c = randomCone(k, 8, 11);
  IntVector d(k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coneMember(c, d));
}
BENCHMARK(BM_ConeMember)->Arg(2)->Arg(4)->Arg(6);

static void BM_SeparatingExtension(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ConeOrder c = orthant(k);
  // d = x - y = -e_0 lies outside the orthant, so the pair is admissible
  IntVector x(k, 0), y(k, 0);
  x[0] = -1;
  for (auto _ : state) benchmark::DoNotOptimize(separatingExtension(c, x, y));
}
BENCHMARK(BM_SeparatingExtension)->Arg(2)->Arg(4)->Arg(6);

static void BM_MonoidMemberBounded(benchmark::State& state) {
  ConeOrder c = randomCone(2, static_cast<int>(state.range(0)), 13);
  IntVector d{3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(monoidMemberBounded(c, d, 6));
}
BENCHMARK(BM_MonoidMemberBounded)->Arg(4)->Arg(8);
