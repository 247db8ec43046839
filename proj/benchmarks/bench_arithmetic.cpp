#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dyadic/dyadic.hpp"

namespace {

std::vector<dyadic::Dyadic> sample(std::size_t n, int max_exp) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-(1 << 20), 1 << 20), exp(-max_exp, 0);
  std::vector<dyadic::Dyadic> out;
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(dyadic::Integer(num(rng)), exp(rng));
  return out;
}

void BM_Add(benchmark::State& state) {
  const auto xs = sample(1024, static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[k % 1024] + xs[(k + 1) % 1024]);
    ++k;
  }
}
BENCHMARK(BM_Add)->Arg(8)->Arg(64)->Arg(512);

void BM_Multiply(benchmark::State& state) {
  const auto xs = sample(1024, static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[k % 1024] * xs[(k + 1) % 1024]);
    ++k;
  }
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(512);

void BM_Midpoint(benchmark::State& state) {
  const auto xs = sample(1024, 16);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyadic::midpoint(xs[k % 1024], xs[(k + 1) % 1024]));
    ++k;
  }
}
BENCHMARK(BM_Midpoint);

void BM_ParseFormat(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyadic::format_dyadic(dyadic::parse_dyadic("-123456789/1048576")));
  }
}
BENCHMARK(BM_ParseFormat);

}  // namespace
