#include <benchmark/benchmark.h>

#include "meanlab/eigensolver.hpp"
#include "meanlab/multi_means.hpp"
#include "meanlab/samplers.hpp"
#include "meanlab/suites.hpp"

using namespace meanlab;

namespace {

void run_suite(benchmark::State& state, const char* name, Execution mode) {
  SuiteOptions opt;
  opt.seed = 1;
  opt.trials = static_cast<int>(state.range(0));
  opt.execution = mode;
  for (auto _ : state) benchmark::DoNotOptimize(run_verification_suite(name, opt));
  state.SetItemsProcessed(state.iterations() * opt.trials);
}

void BM_RelationChainSerial(benchmark::State& s) { run_suite(s, "relation-chain", Execution::Serial); }
void BM_RelationChainParallel(benchmark::State& s) { run_suite(s, "relation-chain", Execution::Parallel); }
void BM_RenyiSerial(benchmark::State& s) { run_suite(s, "renyi-properties", Execution::Serial); }
void BM_RenyiParallel(benchmark::State& s) { run_suite(s, "renyi-properties", Execution::Parallel); }

void BM_Eigensolver(benchmark::State& state) {
  Rng rng(2, "bench-eig");
  const HermitianMatrix h = random_hermitian(rng, static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}

void BM_Barycenter(benchmark::State& state) {
  Rng rng(3, "bench-barycenter");
  std::vector<HpdMatrix> items;
  for (int j = 0; j < 5; ++j) items.push_back(random_hpd(rng, static_cast<int>(state.range(0)), 0.2, 5));
  const MatrixTuple a(std::move(items));
  const WeightVector w = WeightVector::uniform(5);
  for (auto _ : state) benchmark::DoNotOptimize(wasserstein_barycenter(w, a));
}

}  // namespace

BENCHMARK(BM_RelationChainSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelationChainParallel)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RenyiSerial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenyiParallel)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Eigensolver)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_Barycenter)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
