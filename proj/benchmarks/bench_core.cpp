#include "benchmark/benchmark.h"

#include "prbox/behavior.hpp"
#include "prbox/bell.hpp"
#include "prbox/cloning.hpp"
#include "prbox/multiparty.hpp"
#include "prbox/singlet.hpp"

using namespace prbox;

static void BM_ChshExact(benchmark::State& state) {
    const Behavior pr = make_pr_box();
    for (auto _ : state) benchmark::DoNotOptimize(chsh(pr));
}
BENCHMARK(BM_ChshExact);

static void BM_NoSignallingThreeParty(benchmark::State& state) {
    const Behavior clone = perfect_clone_composite();
    for (auto _ : state) benchmark::DoNotOptimize(check_no_signalling(clone));
}
BENCHMARK(BM_NoSignallingThreeParty);

static void BM_LocalMaxChsh(benchmark::State& state) {
    const BellFunctional f = chsh_functional();
    for (auto _ : state) benchmark::DoNotOptimize(local_max(f));
}
BENCHMARK(BM_LocalMaxChsh);

static void BM_IsLocalIsotropic(benchmark::State& state) {
    const Behavior iso = make_isotropic(Rat(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(is_local(iso));
}
BENCHMARK(BM_IsLocalIsotropic);

static void BM_MonogamyLp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(max_symmetric_isotropic_extension());
}
BENCHMARK(BM_MonogamyLp)->Unit(benchmark::kMillisecond);

static void BM_SingletShots(benchmark::State& state) {
    const UnitVector3 a(0, 0, 1), b(1, 0, 0);
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(estimate_correlation(a, b, shots, 1));
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(shots));
}
BENCHMARK(BM_SingletShots)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Corr3Search(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search_corr3_strategies());
}
BENCHMARK(BM_Corr3Search)->Unit(benchmark::kMillisecond);
