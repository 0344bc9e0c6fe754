#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "zek/enumerate.hpp"
#include "zek/knot.hpp"
#include "zek/term.hpp"

namespace {

// Deliberately messy trees: mirrors, nested sums, unknot factors.
zek::Knot random_raw(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> shape(0, 9);
  std::uniform_int_distribution<long long> param(-9, 9);
  int roll = depth <= 0 ? 0 : shape(rng);
  if (roll < 3) return zek::Knot::make_unknot();
  if (roll < 7) {
    long long p = 0, q = 0;
    do {
      p = param(rng);
      q = param(rng);
    } while (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1);
    return zek::Knot::make_cable(p, q, random_raw(rng, depth - 1));
  }
  std::uniform_int_distribution<int> arity(2, 4);
  std::vector<zek::Knot> fs;
  int n = arity(rng);
  for (int i = 0; i < n; ++i) fs.push_back(random_raw(rng, depth - 1));
  return zek::Knot::make_sum(std::move(fs));
}

std::vector<zek::Knot> tree_pool() {
  std::mt19937_64 rng(7);
  std::vector<zek::Knot> pool;
  for (int i = 0; i < 256; ++i) pool.push_back(random_raw(rng, 6));
  return pool;
}

void BM_Canonicalize(benchmark::State& state) {
  auto pool = tree_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zek::canonicalize(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_Genus(benchmark::State& state) {
  auto pool = tree_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zek::genus(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_Genus);

void BM_LinkKey(benchmark::State& state) {
  zek::LinkTerm t = zek::move_v(zek::move_i(zek::LinkTerm::hopf(), zek::LinkTerm::hopf()),
                                zek::Selector{0}, 2, 3, 0, 2);
  for (auto _ : state) {
    zek::LinkTerm next = zek::move_vi(t, zek::Selector{0}, 3);
    benchmark::DoNotOptimize(next.link().key());
  }
}
BENCHMARK(BM_LinkKey);

void BM_EnumerateDepth2(benchmark::State& state) {
  zek::EnumCaps caps;
  caps.max_p = 3;
  caps.max_q = 3;
  caps.max_branch = 4;
  for (auto _ : state) {
    std::size_t n = 0;
    zek::enumerate_links(2, caps, [&](const zek::LinkTerm&, const zek::Link&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateDepth2);

}  // namespace

BENCHMARK_MAIN();
