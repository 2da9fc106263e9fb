#include <benchmark/benchmark.h>

#include <random>

#include "ybfuse/algebra/algebra.hpp"
#include "ybfuse/fusion/fusion.hpp"
#include "ybfuse/io/json.hpp"
#include "ybfuse/kernels/identity_check.hpp"
#include "ybfuse/linalg/elimination.hpp"
#include "ybfuse/linalg/tensor.hpp"

using namespace ybfuse;

namespace {

RationalMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(coef(rng), 10 + coef(rng));
  }
  return m;
}

void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(3)->Arg(6)->Arg(9);

void BM_Rank(benchmark::State& state) {
  const RationalMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(27);

void BM_FusedOperator(benchmark::State& state) {
  const KernelSpec k = KernelSpec::yang(2);
  const ContentString c{Rational(0), Rational(1)};
  const ContentString cbar{Rational(0), Rational(-1)};
  for (auto _ : state) benchmark::DoNotOptimize(fused_operator(k, c, cbar));
}
BENCHMARK(BM_FusedOperator)->Unit(benchmark::kMillisecond);

void BM_FOfTableau(benchmark::State& state) {
  const KernelSpec k = KernelSpec::yang(3);
  const StandardTableau t = parse_tableau("[[1,2],[3,4]]");
  for (auto _ : state) benchmark::DoNotOptimize(f_of_tableau(k, t));
}
BENCHMARK(BM_FOfTableau)->Unit(benchmark::kMillisecond);

void BM_ETableau(benchmark::State& state) {
  const StandardTableau t = parse_tableau(state.range(0) == 4 ? "[[1,2],[3,4]]" : "[[1,2,5],[3,4]]");
  for (auto _ : state) benchmark::DoNotOptimize(e_tableau(t));
}
BENCHMARK(BM_ETableau)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BaseYbeCheck(benchmark::State& state) {
  const KernelSpec k = state.range(0) == 0 ? KernelSpec::yang(2) : KernelSpec::hecke(2, Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(base_ybe_check(k));
}
BENCHMARK(BM_BaseYbeCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
