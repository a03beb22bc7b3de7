#include <benchmark/benchmark.h>

#include "invmaj/cocharge.hpp"
#include "invmaj/codes.hpp"
#include "invmaj/enumerate.hpp"
#include "invmaj/genfun.hpp"
#include "invmaj/hall_littlewood.hpp"
#include "invmaj/statistics.hpp"
#include "invmaj/word_codes.hpp"

using namespace invmaj;

namespace {

Filling sample_filling() {
  return parse_filling("[[1,2,2,3,4,5],[2,3,4,5],[3,5,6],[4,6]]");
}

void BM_inv_relative(benchmark::State& state) {
  Filling f = sample_filling();
  for (auto _ : state) benchmark::DoNotOptimize(inv_relative(f));
}
BENCHMARK(BM_inv_relative);

void BM_maj(benchmark::State& state) {
  Filling f = sample_filling();
  for (auto _ : state) benchmark::DoNotOptimize(maj(f));
}
BENCHMARK(BM_maj);

void BM_macdonald_coefficient(benchmark::State& state) {
  Partition mu({3, 2, 1});
  std::vector<int> alpha(6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(macdonald_coefficient(mu, alpha));
}
BENCHMARK(BM_macdonald_coefficient);

void BM_enumerate_codes(benchmark::State& state) {
  Partition mu({3, 2, 2});
  std::vector<int> A{1, 1, 2, 2, 3, 3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_codes(mu, A));
}
BENCHMARK(BM_enumerate_codes);

void BM_majcode_filling(benchmark::State& state) {
  Filling f = arrange_filling({{1, 1, 2, 3}, {2, 3, 4}, {4, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(majcode_filling(f));
}
BENCHMARK(BM_majcode_filling);

void BM_hl_symmetry_map(benchmark::State& state) {
  Filling f = arrange_filling({{1, 1, 2, 3}, {2, 3, 4}, {4, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(hl_symmetry_map(f));
}
BENCHMARK(BM_hl_symmetry_map);

void BM_cocharge(benchmark::State& state) {
  std::vector<int> w{1, 5, 2, 2, 1, 4, 3, 2, 3, 1, 3, 1, 2, 4};
  for (auto _ : state) benchmark::DoNotOptimize(cocharge(w));
}
BENCHMARK(BM_cocharge);

void BM_carlitz_bijection(benchmark::State& state) {
  std::vector<int> w{8, 3, 10, 1, 6, 9, 2, 7, 4, 5};
  for (auto _ : state) benchmark::DoNotOptimize(carlitz_bijection(w));
}
BENCHMARK(BM_carlitz_bijection);

}  // namespace

BENCHMARK_MAIN();
