// Serial reference against OpenMP kernels on the standard corpus.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "routelab/axioms.hpp"
#include "routelab/corpus.hpp"
#include "routelab/oracle.hpp"
#include "routelab/routing.hpp"
#include "routelab/tightness.hpp"

using namespace routelab;

namespace {

const SuiteCorpus& corpus() {
    static const SuiteCorpus c = standard_corpus(1);
    return c;
}

const std::vector<AxiomId> kMstAxioms = {AxiomId::Robustness, AxiomId::ScaleInvariance, AxiomId::ShiftInvariance,
                                         AxiomId::Monotonicity, AxiomId::FirstHop};
const std::vector<AlgorithmId> kAlgorithms = {AlgorithmId::Mst, AlgorithmId::ShortestPath, AlgorithmId::WeakestLink};

void BM_SuiteSerial(benchmark::State& state) {
    const Router mst = make_router(AlgorithmId::Mst);
    for (auto _ : state) benchmark::DoNotOptimize(run_suite_serial(mst, kMstAxioms, corpus(), 1));
}

void BM_SuiteParallel(benchmark::State& state) {
    const Router mst = make_router(AlgorithmId::Mst);
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(mst, kMstAxioms, corpus(), 1));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_CertifySerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify_corpus_serial(corpus().general, kAlgorithms));
}

void BM_CertifyParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify_corpus(corpus().general, kAlgorithms));
    state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
