#include <benchmark/benchmark.h>

#include "clp/groups.hpp"
#include "clp/tv.hpp"

using namespace clp;

namespace {

const GroupSpec kGl42{Family::GL, 4, 2, FormType::none};
const GroupSpec kSp43{Family::SP, 4, 3, FormType::none};
const GroupSpec kOMinus44{Family::O_EVEN, 4, 4, FormType::minus};

void BM_JordanSerial_GL42(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jordan_counts_serial(kGl42));
}
BENCHMARK(BM_JordanSerial_GL42);

void BM_JordanParallel_GL42(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jordan_counts(kGl42));
}
BENCHMARK(BM_JordanParallel_GL42);

void BM_JordanSerial_Sp43(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jordan_counts_serial(kSp43));
}
BENCHMARK(BM_JordanSerial_Sp43);

void BM_JordanParallel_Sp43(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jordan_counts(kSp43));
}
BENCHMARK(BM_JordanParallel_Sp43);

void BM_JordanSerial_OMinus44(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jordan_counts_serial(kOMinus44));
}
BENCHMARK(BM_JordanSerial_OMinus44);

void BM_JordanParallel_OMinus44(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jordan_counts(kOMinus44));
}
BENCHMARK(BM_JordanParallel_OMinus44);

void BM_GridSerial_GL(benchmark::State& state) {
    std::vector<int> ns = {1, 2, 3, 4, 5, 6};
    std::vector<long> qs = {2, 3, 4};
    for (auto _ : state) benchmark::DoNotOptimize(verify_grid(Family::GL, ns, qs, 1));
}
BENCHMARK(BM_GridSerial_GL);

void BM_GridParallel_GL(benchmark::State& state) {
    std::vector<int> ns = {1, 2, 3, 4, 5, 6};
    std::vector<long> qs = {2, 3, 4};
    for (auto _ : state) benchmark::DoNotOptimize(verify_grid(Family::GL, ns, qs, 0));
}
BENCHMARK(BM_GridParallel_GL);

}  // namespace

BENCHMARK_MAIN();
