// Microbenchmarks for the skein engine, the rewrite-orbit square search, and
// the bracket oracle. Not registered with ctest; run bench_homfly directly.

#include <benchmark/benchmark.h>

#include "braidpoly/braid_word.hpp"
#include "braidpoly/homfly.hpp"
#include "braidpoly/oracles.hpp"
#include "braidpoly/rewrite.hpp"

namespace {

using braidpoly::BraidWord;

BraidWord torus_2k(int k) {
  BraidWord w;
  w.strands = 2;
  w.letters.assign(static_cast<std::size_t>(k), 1);
  return w;
}

BraidWord hopf_sum(int k) {
  BraidWord w;
  w.strands = k + 1;
  for (int i = 1; i <= k; ++i) {
    w.letters.push_back(i);
    w.letters.push_back(i);
  }
  return w;
}

BraidWord cable_word() {
  BraidWord w;
  w.strands = 4;
  for (int r = 0; r < 3; ++r) w.letters.insert(w.letters.end(), {2, 1, 3, 2});
  w.letters.insert(w.letters.end(), {-1, -1, -1});
  return w;
}

// Fresh cache per iteration: measures the full recursion, not a memo hit.
void homfly_fresh(benchmark::State& state, const BraidWord& w) {
  for (auto _ : state) {
    braidpoly::HomflyCache cache;
    benchmark::DoNotOptimize(braidpoly::homfly(w, cache));
  }
}

void BM_homfly_trefoil(benchmark::State& state) {
  homfly_fresh(state, torus_2k(3));
}

void BM_homfly_torus_2_12(benchmark::State& state) {
  homfly_fresh(state, torus_2k(12));
}

void BM_homfly_hopf_sum_6(benchmark::State& state) {
  homfly_fresh(state, hopf_sum(6));
}

void BM_homfly_cable(benchmark::State& state) {
  homfly_fresh(state, cable_word());
}

void BM_square_search(benchmark::State& state) {
  // Square-free seed: the search has to work through the orbit.
  const BraidWord w = braidpoly::parse_braid("4: 1 2 3 1 2 3 1 2 3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(braidpoly::find_positive_square(w));
  }
}

void BM_bracket_jones_12(benchmark::State& state) {
  const BraidWord w = torus_2k(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(braidpoly::bracket_jones(w));
  }
}

BENCHMARK(BM_homfly_trefoil);
BENCHMARK(BM_homfly_torus_2_12);
BENCHMARK(BM_homfly_hopf_sum_6);
BENCHMARK(BM_homfly_cable);
BENCHMARK(BM_square_search);
BENCHMARK(BM_bracket_jones_12);

}  // namespace

BENCHMARK_MAIN();
