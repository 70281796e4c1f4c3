#include <benchmark/benchmark.h>

#include "odun/characters.hpp"
#include "odun/orbit_oracle.hpp"
#include "odun/plethysm.hpp"
#include "odun/power_sum.hpp"
#include "odun/schur.hpp"
#include "odun/transformation.hpp"

using namespace odun;

namespace {

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_CharacterTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(CharacterTable::build(n, mode(state)));
    label(state);
}
BENCHMARK(BM_CharacterTable)->ArgsProduct({{16, 20, 24}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SchurToPower(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SchurPolynomial f;
    for (const Partition& lambda : partitions_of(n)) f.add_term(lambda, 1);
    character_table(n);
    for (auto _ : state) benchmark::DoNotOptimize(schur_to_power(f, mode(state)));
    label(state);
}
BENCHMARK(BM_SchurToPower)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PowerToSchur(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PowerSumPolynomial g = schur_to_power(SchurPolynomial::complete(n));
    for (auto _ : state) benchmark::DoNotOptimize(power_to_schur(g, mode(state)));
    label(state);
}
BENCHMARK(BM_PowerToSchur)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Plethysm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SchurPolynomial inner = multiply(SchurPolynomial::complete(1), SchurPolynomial::complete(n - 1));
    for (auto _ : state) benchmark::DoNotOptimize(plethysm(SchurPolynomial::complete(2), inner, mode(state)));
    label(state);
}
BENCHMARK(BM_Plethysm)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PermutationCharacter(benchmark::State& state) {
    const PartialTransformation f = parse_map(state.range(0) == 7 ? "2,3,0,5,0,7,0" : "2,3,0,5,0,7,0,1");
    for (auto _ : state) benchmark::DoNotOptimize(perm_character_decompose(f, mode(state)));
    label(state);
}
BENCHMARK(BM_PermutationCharacter)->ArgsProduct({{7, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
