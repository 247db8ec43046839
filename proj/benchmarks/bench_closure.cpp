#include <benchmark/benchmark.h>

#include "dyadic/oracle.hpp"

namespace {

void BM_ClosureLine(benchmark::State& state) {
  const dyadic::Dyadic gens[] = {dyadic::Dyadic(0), dyadic::Dyadic(3)};
  for (auto _ : state) benchmark::DoNotOptimize(dyadic::closure(gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClosureLine)->DenseRange(4, 10, 2);

void BM_ClosurePlane(benchmark::State& state) {
  const dyadic::Vec2 gens[] = {dyadic::Vec2{0, 0}, dyadic::Vec2{1, 0}, dyadic::Vec2{0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(dyadic::closure(gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClosurePlane)->DenseRange(1, 4);

void BM_GeneratesSimplex(benchmark::State& state) {
  const dyadic::Vec2 gens[] = {dyadic::Vec2{0, 0}, dyadic::Vec2{1, 0}, dyadic::Vec2{0, 1}};
  const dyadic::Triangle simplex{{gens[0], gens[1], gens[2]}};
  for (auto _ : state) benchmark::DoNotOptimize(dyadic::generates(gens, simplex, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GeneratesSimplex)->DenseRange(1, 4);

}  // namespace
