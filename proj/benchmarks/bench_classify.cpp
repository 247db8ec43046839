#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dyadic/isomorphism.hpp"

namespace {

std::vector<dyadic::Triangle> triangles(std::size_t n, std::int64_t max_num, std::int64_t min_exp) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-max_num, max_num), exp(min_exp, 0);
  const auto coord = [&] { return dyadic::Dyadic(dyadic::Integer(num(rng)), exp(rng)); };
  std::vector<dyadic::Triangle> out;
  while (out.size() < n) {
    dyadic::Triangle t{{dyadic::Vec2{coord(), coord()}, dyadic::Vec2{coord(), coord()}, dyadic::Vec2{coord(), coord()}}};
    if (!dyadic::is_degenerate(t)) out.push_back(t);
  }
  return out;
}

void BM_Encode(benchmark::State& state) {
  const auto ts = triangles(256, std::int64_t{1} << state.range(0), -6);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dyadic::encode(ts[k++ % ts.size()], 0));
}
BENCHMARK(BM_Encode)->Arg(4)->Arg(10)->Arg(30);

void BM_EncodeAll(benchmark::State& state) {
  const auto ts = triangles(256, 1 << 10, -6);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dyadic::encode_all(ts[k++ % ts.size()]));
}
BENCHMARK(BM_EncodeAll);

void BM_Isomorphic(benchmark::State& state) {
  const auto ts = triangles(256, 1 << 10, -6);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyadic::isomorphic(ts[k % ts.size()], ts[(k + 1) % ts.size()]));
    ++k;
  }
}
BENCHMARK(BM_Isomorphic);

}  // namespace
