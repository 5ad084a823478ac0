#include <benchmark/benchmark.h>

#include <vector>

#include "acstark/bath.hpp"
#include "acstark/dephasing.hpp"
#include "acstark/fock.hpp"
#include "acstark/lindblad.hpp"
#include "acstark/quadrature.hpp"

namespace {

acstark::PhysicalParams typical() {
    acstark::PhysicalParams p;
    p.gamma_s = 1.0;
    p.omega_rabi = 0.1;
    p.detuning = 1.0;
    p.omega0 = 10.0;
    p.lambda_lw = 1.0;
    return p;
}

void BM_ClosedForm(benchmark::State& state) {
    const acstark::DimensionlessParams d{10.0, 0.01};
    double tau = 0.0;
    for (auto _ : state) {
        tau += 1e-3;
        benchmark::DoNotOptimize(acstark::gamma_dimensionless(tau, d));
    }
}
BENCHMARK(BM_ClosedForm);

void BM_FullLine(benchmark::State& state) {
    const acstark::DimensionlessParams d{10.0, 0.01};
    double tau = 0.0;
    for (auto _ : state) {
        tau += 1e-3;
        benchmark::DoNotOptimize(acstark::gamma_full_line(tau, d));
    }
}
BENCHMARK(BM_FullLine);

void BM_Quadrature(benchmark::State& state) {
    const acstark::DimensionlessParams d{static_cast<double>(state.range(0)), 0.01};
    for (auto _ : state) benchmark::DoNotOptimize(acstark::bath::integrate_decoherence(100.0, d).value);
}
BENCHMARK(BM_Quadrature)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DiscreteBath(benchmark::State& state) {
    const auto bath = acstark::bath::sample_lorentzian_bath(typical(), static_cast<std::size_t>(state.range(0)), 1000.0);
    for (auto _ : state) benchmark::DoNotOptimize(acstark::bath::gamma_discrete(1.0, bath));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DiscreteBath)->Arg(5000)->Arg(20000);

void BM_Fock(benchmark::State& state) {
    acstark::bath::InteractionModel model;
    model.truncation = 16;
    for (int k = 0; k < state.range(0); ++k) model.modes.push_back({1.0 + 0.5 * k, 0.3});
    const std::vector<double> times{1.0, 2.0, 5.0};
    for (auto _ : state) benchmark::DoNotOptimize(acstark::bath::evolve_fock(model, times, 1e-10));
}
BENCHMARK(BM_Fock)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_LindbladRateFit(benchmark::State& state) {
    const acstark::compare::LindbladParams p{0.05, 1.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(acstark::compare::fit_dephasing_rate(p, 2000).rate);
}
BENCHMARK(BM_LindbladRateFit)->Unit(benchmark::kMillisecond);

}  // namespace

// the packaged benchmark_main archive is LTO bytecode from another compiler build
BENCHMARK_MAIN();
