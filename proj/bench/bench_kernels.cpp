// Serial reference vs OpenMP kernels. Thread count is the last range
// argument of the parallel cases (0 = OpenMP default). Wall-clock time is
// reported, since CPU time of the calling thread hides the workers.

#include "unifrechet/kernels.h"
#include "unifrechet/simulation.h"

#include <benchmark/benchmark.h>

namespace {

const uf::UfParams kTheta(0.8, 2.0, 0.6);
const uf::BivParams kBiv(1.5, 1.0, 3.0, 0.7);

void BM_UfSampleSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(uf::kernels::uf_sample_serial(kTheta, n, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_UfSampleParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(uf::kernels::uf_sample_parallel(kTheta, n, 1, threads));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BivSampleSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(uf::kernels::biv_sample_serial(kBiv, n, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BivSampleParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(uf::kernels::biv_sample_parallel(kBiv, n, 1, threads));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

uf::SimConfig study(int threads) {
    uf::SimConfig cfg;
    cfg.thetas = {uf::UfParams(1, 2, 0.5)};
    cfg.sample_sizes = {30, 100};
    cfg.replications = 40;
    cfg.master_seed = 3;
    cfg.parallelism = threads;
    return cfg;
}

void BM_StudySerial(benchmark::State& state) {
    const uf::SimConfig cfg = study(1);
    for (auto _ : state) benchmark::DoNotOptimize(uf::run_study_serial(cfg));
}

void BM_StudyParallel(benchmark::State& state) {
    const uf::SimConfig cfg = study(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(uf::run_study(cfg));
}

}  // namespace

BENCHMARK(BM_UfSampleSerial)->Arg(1 << 16)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_UfSampleParallel)->ArgsProduct({{1 << 16, 1 << 20}, {0, 1, 2, 4}})->UseRealTime();
BENCHMARK(BM_BivSampleSerial)->Arg(1 << 14)->Arg(1 << 17)->UseRealTime();
BENCHMARK(BM_BivSampleParallel)->ArgsProduct({{1 << 14, 1 << 17}, {0, 1, 2, 4}})->UseRealTime();
BENCHMARK(BM_StudySerial)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StudyParallel)->Arg(0)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
