#include <benchmark/benchmark.h>

#include "suptrop/adjoint.hpp"
#include "suptrop/charpoly.hpp"
#include "suptrop/checks.hpp"
#include "suptrop/eigen.hpp"
#include "suptrop/oracle.hpp"

using namespace suptrop;

namespace {

Matrix fixture(int n, std::uint64_t seed) {
  Rng rng(seed);
  GenCfg cfg;
  return random_matrix(rng, n, cfg);
}

void BM_det_assignment(benchmark::State& state) {
  Matrix a = fixture(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(tropical_det(a));
}
BENCHMARK(BM_det_assignment)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_det_brute(benchmark::State& state) {
  Matrix a = fixture(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_det(a));
}
BENCHMARK(BM_det_brute)->Arg(4)->Arg(6)->Arg(7);

void BM_matrix_mul(benchmark::State& state) {
  Matrix a = fixture(static_cast<int>(state.range(0)), 7);
  Matrix b = fixture(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_matrix_mul)->Arg(8)->Arg(32)->Arg(64);

void BM_adjoint(benchmark::State& state) {
  Matrix a = fixture(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(adjoint(a));
}
BENCHMARK(BM_adjoint)->Arg(4)->Arg(6)->Arg(8);

void BM_charpoly(benchmark::State& state) {
  Matrix a = fixture(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_charpoly)->Arg(4)->Arg(6)->Arg(8);

void BM_eigen_pairs(benchmark::State& state) {
  Rng rng(11);
  GenCfg cfg;
  cfg.allow_ghost = false;
  Matrix a = random_matrix(rng, static_cast<int>(state.range(0)), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_pairs(a));
}
BENCHMARK(BM_eigen_pairs)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
