#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "seqlab/density.hpp"
#include "seqlab/membership.hpp"
#include "seqlab/orlicz.hpp"
#include "seqlab/witnesses.hpp"

using namespace seqlab;

namespace {

void BM_FDensitySquares(benchmark::State& state) {
    auto set = make_index_set("squares");
    auto f = make_modulus("log1p");
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f_density(set, f, n, kDefaultTol));
}
BENCHMARK(BM_FDensitySquares)->RangeMultiplier(10)->Range(10000, 10000000);

void BM_ComplementCheck(benchmark::State& state) {
    auto set = make_index_set("evens");
    auto f = make_modulus("pow:0.5");
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(complement_inequality_check(set, f, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComplementCheck)->Arg(100000);

SequencePrefix random_prefix(Index n) {
    std::mt19937 gen(1);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(gen);
    return SequencePrefix(std::move(v), "random");
}

void BM_Luxemburg(benchmark::State& state) {
    auto x = random_prefix(static_cast<Index>(state.range(0)));
    auto fam = OrliczFamily::uniform(OrliczFn::explog());
    for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(fam, x, 1e-12));
}
BENCHMARK(BM_Luxemburg)->RangeMultiplier(10)->Range(100, 100000);

void BM_OrliczNorm(benchmark::State& state) {
    auto x = random_prefix(static_cast<Index>(state.range(0)));
    auto fam = OrliczFamily::uniform(OrliczFn::power(2.0));
    for (auto _ : state) benchmark::DoNotOptimize(orlicz_norm(fam, x, 1e-12));
}
BENCHMARK(BM_OrliczNorm)->RangeMultiplier(10)->Range(100, 100000);

void BM_BlockMembership(benchmark::State& state) {
    auto inst = gen_thm36_instance(1.0, 1.0, static_cast<Index>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fstat_membership_block(inst.x, inst.params, kDefaultTol));
}
BENCHMARK(BM_BlockMembership)->DenseRange(10, 18, 4);

void BM_WitnessExtraction(benchmark::State& state) {
    auto x = make_sequence("spike:set=squares,base=2,delta=1", static_cast<Index>(state.range(0)));
    SpaceParams p;
    p.limit = 2.0;
    auto f = make_modulus("id");
    for (auto _ : state) benchmark::DoNotOptimize(extract_witness_set(x, p, f, 5));
}
BENCHMARK(BM_WitnessExtraction)->Arg(100000)->Arg(1000000);

}  // namespace
BENCHMARK_MAIN();
