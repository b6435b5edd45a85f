// Closed-form paths vs the dense reference, plus scaling of the blockwise
// routines with qubit count.

#include <benchmark/benchmark.h>

#include "xent/channels.hpp"
#include "xent/concurrence.hpp"
#include "xent/esd.hpp"
#include "xent/membership.hpp"
#include "xent/oracle.hpp"
#include "xent/sampling.hpp"
#include "xent/spectra.hpp"
#include "xent/xstate.hpp"

namespace {

xent::XState sample_state(int n) {
    xent::Sampler rng(20240915);
    return rng.random_xstate(n);
}

void BM_BlockEigenvalues(benchmark::State& state) {
    const xent::XState s = sample_state(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(s.eigenvalues());
}
BENCHMARK(BM_BlockEigenvalues)->Arg(3)->Arg(6)->Arg(10)->Arg(14);

void BM_DenseEigenvalues(benchmark::State& state) {
    const xent::DenseOperator m = xent::to_dense(sample_state(int(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(xent::oracle::hermitian_eigenvalues(m));
}
BENCHMARK(BM_DenseEigenvalues)->Arg(3)->Arg(4);

void BM_PtSpectrumClosed(benchmark::State& state) {
    const xent::XState s = sample_state(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(xent::pt_spectrum(s, 1));
}
BENCHMARK(BM_PtSpectrumClosed)->Arg(3)->Arg(10)->Arg(14);

void BM_PtSpectrumDense(benchmark::State& state) {
    const xent::DenseOperator m = xent::to_dense(sample_state(int(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            xent::oracle::hermitian_eigenvalues(xent::oracle::partial_transpose(m, 1)));
    }
}
BENCHMARK(BM_PtSpectrumDense)->Arg(3)->Arg(4);

void BM_DepolarizeClosed(benchmark::State& state) {
    const xent::XState s = sample_state(3);
    for (auto _ : state) benchmark::DoNotOptimize(xent::apply_depolarizing3(s, 0.3));
}
BENCHMARK(BM_DepolarizeClosed);

void BM_DepolarizeKraus(benchmark::State& state) {
    const xent::DenseOperator m = xent::to_dense(sample_state(3));
    const xent::ChannelSpec spec{xent::ChannelKind::depolarizing, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(xent::apply_kraus_dense(m, spec));
}
BENCHMARK(BM_DepolarizeKraus);

void BM_ConcurrenceClosed(benchmark::State& state) {
    const xent::XState s = sample_state(3);
    for (auto _ : state) benchmark::DoNotOptimize(xent::concurrence_terms_x(s));
}
BENCHMARK(BM_ConcurrenceClosed);

void BM_ConcurrenceOracle(benchmark::State& state) {
    const xent::XState s = sample_state(3);
    for (auto _ : state) benchmark::DoNotOptimize(xent::concurrence_terms_oracle(s));
}
BENCHMARK(BM_ConcurrenceOracle);

void BM_EsdDephasing(benchmark::State& state) {
    const xent::XState s = sample_state(3);
    for (auto _ : state) benchmark::DoNotOptimize(xent::esd_dephasing(s, 3));
}
BENCHMARK(BM_EsdDephasing);

void BM_EsdDepolarizing(benchmark::State& state) {
    const xent::XState s = sample_state(3);
    for (auto _ : state) benchmark::DoNotOptimize(xent::esd_depolarizing(s, 3));
}
BENCHMARK(BM_EsdDepolarizing);

void BM_MembershipGenericPhase(benchmark::State& state) {
    xent::Sampler rng(7);
    const xent::XState s =
        xent::from_generalized_ghz_diagonal(rng.random_ggd_spec(int(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(xent::is_generalized_ghz_diagonal(s));
}
BENCHMARK(BM_MembershipGenericPhase)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
