#include <benchmark/benchmark.h>

#include "padicfrac/expansion.hpp"
#include "padicfrac/experiment/sweep.hpp"
#include "padicfrac/oracle.hpp"

using namespace padicfrac;

namespace {

// fresh context each time so the root cache does not hide the lift
void BM_HenselSqrt(benchmark::State& state) {
  const long K = state.range(0);
  for (auto _ : state) {
    const PrimeCtx ctx(5);
    benchmark::DoNotOptimize(ctx.hensel_sqrt(Int(19), Branch::kPlus, K));
  }
}
BENCHMARK(BM_HenselSqrt)->Arg(64)->Arg(1024)->Arg(8192);

void BM_ExpandSqrt19(benchmark::State& state) {
  const PrimeCtx ctx(5);
  const AlgorithmId alg = state.range(0) == 0 ? AlgorithmId::neww() : AlgorithmId::murru();
  for (auto _ : state) benchmark::DoNotOptimize(expand(ctx, Surd::sqrt(Int(19)), alg, 1000));
}
BENCHMARK(BM_ExpandSqrt19)->Arg(0)->Arg(1);

void BM_Browkin1Truncated(benchmark::State& state) {
  const PrimeCtx ctx(5);
  const long steps = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(expand(ctx, Surd::sqrt(Int(19)), AlgorithmId::browkin1(), steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_Browkin1Truncated)->Arg(1000)->Arg(10000);

void BM_LargeD(benchmark::State& state) {
  const PrimeCtx ctx(5);
  const Surd a = Surd::sqrt(Int("235032571341"));
  for (auto _ : state) benchmark::DoNotOptimize(expand(ctx, a, AlgorithmId::neww(), 10000));
}
BENCHMARK(BM_LargeD)->Unit(benchmark::kMillisecond);

void BM_VerifyPeriod(benchmark::State& state) {
  const PrimeCtx ctx(5);
  const Surd a = Surd::sqrt(Int(19));
  const auto r = expand(ctx, a, AlgorithmId::murru(), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify_period(5, a, AlgorithmId::murru(), r));
}
BENCHMARK(BM_VerifyPeriod);

void BM_RationalExpand(benchmark::State& state) {
  const PrimeCtx ctx(71);
  const Surd x = Surd::rational(*parse_rat("1309328571134/103481351"));
  for (auto _ : state) benchmark::DoNotOptimize(expand(ctx, x, AlgorithmId::neww(), 100));
}
BENCHMARK(BM_RationalExpand);

void BM_TableRow(benchmark::State& state) {
  experiment::SweepConfig cfg;
  cfg.primes = {static_cast<Prime>(state.range(0))};
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(experiment::run_sweep(cfg));
}
BENCHMARK(BM_TableRow)->Arg(5)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
