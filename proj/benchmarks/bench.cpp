#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tautfill/ball.hpp"
#include "tautfill/chain.hpp"
#include "tautfill/fill.hpp"
#include "tautfill/oracle.hpp"
#include "tautfill/sphere.hpp"

using namespace tautfill;

namespace {

Chain random_chain(int dim, int universe, int terms, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  Chain c(dim);
  std::vector<VertexId> pool(universe);
  for (int i = 0; i < universe; ++i) pool[i] = i;
  for (int i = 0; i < terms; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<VertexId> s(pool.begin(), pool.begin() + dim + 1);
    std::sort(s.begin(), s.end());
    int n = num(rng);
    c.add_term(std::span<const VertexId>(s), Rational(n == 0 ? 1 : n));
  }
  return c;
}

void BM_Boundary(benchmark::State& state) {
  Chain c = random_chain(3, 16, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(boundary(c));
}

void BM_Cone(benchmark::State& state) {
  Chain x = boundary(random_chain(3, 16, static_cast<int>(state.range(0)), 8));
  for (auto _ : state) benchmark::DoNotOptimize(cone(0, x));
}

void BM_QvolOctahedron(benchmark::State& state) {
  Chain x = orientation_cycle(catalog("octahedron"));
  for (auto _ : state) benchmark::DoNotOptimize(qvol(x));
}

void BM_ZvolOctahedron(benchmark::State& state) {
  Chain x = orientation_cycle(catalog("octahedron"));
  for (auto _ : state) benchmark::DoNotOptimize(zvol(x));
}

void BM_QvolIcosahedron(benchmark::State& state) {
  Chain x = orientation_cycle(catalog("icosahedron"));
  for (auto _ : state) benchmark::DoNotOptimize(qvol(x));
}

void BM_OracleOctahedron(benchmark::State& state) {
  Chain x = orientation_cycle(catalog("octahedron"));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_zvol(x));
}

void BM_FreeShellingOctahedron(benchmark::State& state) {
  SphereTriangulation s = catalog("octahedron");
  BallComplex tau = to_ball_complex(zvol(orientation_cycle(s)).filling, s);
  for (auto _ : state) benchmark::DoNotOptimize(verify_freely_shellable(tau));
}

void BM_FlagCheckOctahedron(benchmark::State& state) {
  SphereTriangulation s = catalog("octahedron");
  BallComplex tau = to_ball_complex(zvol(orientation_cycle(s)).filling, s);
  for (auto _ : state) benchmark::DoNotOptimize(flag_check(tau));
}

}  // namespace

BENCHMARK(BM_Boundary)->Arg(16)->Arg(64);
BENCHMARK(BM_Cone)->Arg(16)->Arg(64);
BENCHMARK(BM_QvolOctahedron);
BENCHMARK(BM_ZvolOctahedron);
BENCHMARK(BM_QvolIcosahedron)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleOctahedron);
BENCHMARK(BM_FreeShellingOctahedron);
BENCHMARK(BM_FlagCheckOctahedron);

BENCHMARK_MAIN();
