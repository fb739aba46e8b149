#include <benchmark/benchmark.h>

#include "supercong/engine.hpp"
#include "supercong/factorial.hpp"
#include "supercong/harmonic.hpp"

using namespace supercong;

static void BM_LhsNaive(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const TheoremParams q(3, 3, 3);
  const PrimePowerModulus m(p, 3);
  const FactorialTables tables(required_table_limit(q, p), m);
  for (auto _ : state) benchmark::DoNotOptimize(lhs_naive(q, tables));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LhsNaive)->Arg(11)->Arg(31)->Arg(61)->Arg(101)->Complexity(benchmark::oNCubed);

static void BM_Decompose(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const TheoremParams q(3, 3, 3);
  const PrimePowerModulus m(p, 3);
  const FactorialTables tables(required_table_limit(q, p), m);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(q, tables));
}
BENCHMARK(BM_Decompose)->Arg(11)->Arg(31)->Arg(101);

static void BM_HarmonicSum(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const PrimePowerModulus m(p, 3);
  const CompositionSignature sig({1, -1, 2}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_sum(sig, p - 1, m));
}
BENCHMARK(BM_HarmonicSum)->Arg(101)->Arg(1009)->Arg(4999);

static void BM_BinomialPAdic(benchmark::State& state) {
  const PrimePowerModulus m(101, 3);
  const FactorialTables tables(909, m);
  i64 n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(binomial_padic(300 + n % 600, 150 + n % 150, tables));
    ++n;
  }
}
BENCHMARK(BM_BinomialPAdic);

BENCHMARK_MAIN();
