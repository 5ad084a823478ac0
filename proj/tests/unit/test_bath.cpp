#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "acstark/bath.hpp"
#include "acstark/dephasing.hpp"
#include "acstark/error.hpp"
#include "acstark/fock.hpp"
#include "acstark/quadrature.hpp"

namespace acstark::bath {
namespace {

PhysicalParams make_params(double q, double r) {
    // Γ_M = 1: Γ_s = 100, Ω = 1, Δ = 10
    PhysicalParams p{100.0, 1.0, 10.0, 0.0, 0.0, 0.0};
    p.lambda_lw = r;
    p.omega0 = q * r;
    return p;
}

TEST(Quadrature, VanishesAtOrigin) {
    EXPECT_EQ(integrate_decoherence(0.0, DimensionlessParams{10.0, 0.01}).value, 0.0);
    EXPECT_EQ(gamma_quadrature(0.0, make_params(1.0, 1.0), 1e-10), 0.0);
}

TEST(Quadrature, MatchesFullLine) {
    for (double q : {0.0, 0.001, 1.0, 10.0, 100.0}) {
        for (double r : {1e-5, 0.01, 1.0, 100.0}) {
            const DimensionlessParams d{q, r};
            for (double tau : {0.01, 0.5, 2.0, 5.0}) {
                const auto res = integrate_decoherence(tau, d);
                const double ref = gamma_full_line(tau, d);
                EXPECT_NEAR(res.value, ref, 1e-9 * ref) << "q=" << q << " r=" << r << " tau=" << tau;
                EXPECT_LE(res.error_estimate, 1e-10 * std::abs(res.value));
            }
        }
    }
}

TEST(Quadrature, ClosedFormCarriesHalfTheTransient) {
    // The integral at (Q=10, R=0.01, τ=1) is the full-line value, which sits a
    // third below the closed form.
    const DimensionlessParams d{10.0, 0.01};
    const double quad = integrate_decoherence(1.0, d).value;
    EXPECT_NEAR(quad, 0.0049792345457626915093, 1e-12);
    EXPECT_GT(std::abs(quad - gamma_dimensionless(1.0, d)) / gamma_dimensionless(1.0, d), 0.3);
}

TEST(Quadrature, ZeroCenterFrequency) {
    // ω₀ = 0: the full-line integral is Γ_M[t - (1 - e^{-λt})/λ]
    PhysicalParams p{1.0, 1.0, 10.0, 0.0, 3.0, 0.0};
    const double gm = gamma_markovian(p);
    for (double t : {0.05, 1.0, 10.0}) {
        const double expect = gm * (t - (1.0 - std::exp(-p.lambda_lw * t)) / p.lambda_lw);
        EXPECT_NEAR(gamma_quadrature(t, p, 1e-10), expect, 1e-9 * expect);
    }
}

TEST(Quadrature, PhysicalMatchesDimensionless) {
    const auto p = make_params(3.0, 0.7);
    const auto d = DimensionlessParams::from_physical(p);
    for (double t : {0.2, 1.0, 4.0}) {
        EXPECT_NEAR(gamma_quadrature(t, p, 1e-10), integrate_decoherence(gamma_markovian(p) * t, d).value,
                    1e-9 * gamma_quadrature(t, p, 1e-10));
    }
}

TEST(Quadrature, PositiveLineBelowFullLine) {
    const DimensionlessParams d{1.0, 1.0};
    QuadratureOptions pos;
    pos.domain = FrequencyDomain::PositiveLine;
    const double full = integrate_decoherence(2.0, d).value;
    const double half = integrate_decoherence(2.0, d, pos).value;
    EXPECT_GT(half, 0.0);
    EXPECT_LT(half, full);
    // far above the origin the negative-frequency tail is negligible
    const DimensionlessParams far{100.0, 1.0};
    EXPECT_NEAR(integrate_decoherence(2.0, far, pos).value, integrate_decoherence(2.0, far).value, 1e-3 * 2.0);
}

TEST(Quadrature, LargeQuality) {
    const DimensionlessParams d{1e4, 1e-5};
    for (double tau : {1e3, 1e5, 1e6}) {
        const double ref = gamma_full_line(tau, d);
        EXPECT_NEAR(integrate_decoherence(tau, d).value, ref, 1e-8 * ref) << tau;
    }
}

TEST(Quadrature, ToleranceRange) {
    QuadratureOptions o;
    o.rel_tol = 1e-2;
    EXPECT_THROW(integrate_decoherence(1.0, DimensionlessParams{1.0, 1.0}, o), DomainError);
    o.rel_tol = 1e-15;
    EXPECT_THROW(integrate_decoherence(1.0, DimensionlessParams{1.0, 1.0}, o), DomainError);
    EXPECT_THROW(integrate_decoherence(-1.0, DimensionlessParams{1.0, 1.0}), DomainError);
}

TEST(Quadrature, PanelBudget) {
    QuadratureOptions o;
    o.max_panels = 10;
    EXPECT_THROW(integrate_decoherence(1.0, DimensionlessParams{1.0, 1.0}, o), ConvergenceError);
}

TEST(DiscreteBath, Normalisation) {
    const auto p = make_params(5.0, 2.0);
    const auto b = sample_lorentzian_bath(p, 20000, 1000.0);
    const double full = gamma_markovian(p) * p.lambda_lw;
    // midpoint sum over ±1000 widths leaves out 2/(1000π) of the weight
    const double kept = 1.0 - 2.0 / (std::numbers::pi * 1000.0);
    EXPECT_NEAR(b.total_weight(), full * kept, 1e-5 * full);
    for (const auto& m : b.modes) EXPECT_GE(m.weight, 0.0);
}

TEST(DiscreteBath, TwoModesSymmetric) {
    const auto p = make_params(50.0, 1.0);
    const auto b = sample_lorentzian_bath(p, 2, 10.0);
    ASSERT_EQ(b.modes.size(), 2u);
    EXPECT_NEAR(b.modes[0].omega + b.modes[1].omega, 2.0 * p.omega0, 1e-12);
    EXPECT_DOUBLE_EQ(b.modes[0].weight, b.modes[1].weight);
}

TEST(DiscreteBath, PositiveLineClips) {
    const auto p = make_params(1.0, 1.0);
    const auto b = sample_lorentzian_bath(p, 1000, 100.0, FrequencyDomain::PositiveLine);
    for (const auto& m : b.modes) EXPECT_GT(m.omega, 0.0);
    EXPECT_EQ(b.meta.domain, FrequencyDomain::PositiveLine);
}

TEST(DiscreteBath, ZeroNodeKept) {
    // ω₀ = 0 with an odd mode count puts a node on the origin
    const auto p = make_params(0.0, 1.0);
    const auto b = sample_lorentzian_bath(p, 101, 10.0);
    EXPECT_EQ(b.meta.zero_nodes, 1u);
    ASSERT_EQ(b.modes.size(), 101u);
    EXPECT_EQ(b.modes[50].omega, 0.0);
    DiscreteBath only;
    only.modes.push_back(b.modes[50]);
    EXPECT_NEAR(gamma_discrete(3.0, only), b.modes[50].weight * 4.5, 1e-15);
}

TEST(DiscreteBath, Rejects) {
    const auto p = make_params(1.0, 1.0);
    EXPECT_THROW(sample_lorentzian_bath(p, 1, 100.0), DomainError);
    EXPECT_THROW(sample_lorentzian_bath(p, 100, 5.0), DomainError);
}

TEST(GammaDiscrete, SingleMode) {
    DiscreteBath b;
    b.modes.push_back({1.0, 0.04});
    EXPECT_EQ(gamma_discrete(0.0, b), 0.0);
    EXPECT_NEAR(gamma_discrete(std::numbers::pi, b), 0.08, 1e-16);
    EXPECT_THROW(gamma_discrete(-1.0, b), DomainError);
}

TEST(GammaDiscrete, ConvergesToFullLine) {
    const auto p = make_params(10.0, 0.01);
    const auto d = DimensionlessParams::from_physical(p);
    const auto b = sample_lorentzian_bath(p, 20000, 1000.0);
    for (double tau : {0.1, 1.0, 5.0}) {
        const double ref = gamma_full_line(tau, d);
        EXPECT_NEAR(gamma_discrete(tau, b), ref, 1e-3 * ref) << tau;
    }
}

TEST(GammaDiscrete, ErrorShrinksUnderDoubling) {
    const auto p = make_params(1.0, 1.0);
    const auto d = DimensionlessParams::from_physical(p);
    double prev = INFINITY;
    // first recurrence sits at λt = 2π/(hλ) for spacing h, beyond τ = 5 from n = 2500
    for (std::size_t n : {2500u, 5000u, 10000u, 20000u}) {
        const auto b = sample_lorentzian_bath(p, n, 1000.0);
        double worst = 0.0;
        for (double tau = 0.1; tau <= 5.0; tau += 0.1) {
            const double ref = gamma_full_line(tau, d);
            worst = std::max(worst, std::abs(gamma_discrete(tau, b) - ref) / ref);
        }
        EXPECT_LT(worst, prev) << n;
        prev = worst;
    }
}

TEST(PhasePhi, Properties) {
    DiscreteBath b;
    b.modes.push_back({1.0, 4.0});
    EXPECT_EQ(phase_phi(0.0, b), 0.0);
    EXPECT_NEAR(phase_phi(std::numbers::pi / 2.0, b), 1.0, 1e-15);
    b.modes.push_back({2.7, 0.3});
    for (double t : {0.3, 1.1, 9.0}) EXPECT_DOUBLE_EQ(phase_phi(-t, b), -phase_phi(t, b));
}

TEST(GlobalPhase, MatchesIntegralOfPhi) {
    DiscreteBath b;
    b.modes.push_back({1.3, 0.5});
    b.modes.push_back({0.4, 0.2});
    // ∫₀ᵗ dt₁ ∫₀^{t₁} Φ(s) ds by a fine trapezoid on the inner antiderivative
    const double t = 2.0;
    const int n = 4000;
    double outer = 0.0;
    double inner = 0.0;
    double prev_inner = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double a = t * (i - 1) / n;
        const double c = t * i / n;
        inner += (phase_phi(a, b) + phase_phi(c, b)) * (c - a) / 2.0;
        outer += (prev_inner + inner) * (c - a) / 2.0;
        prev_inner = inner;
    }
    EXPECT_NEAR(global_phase(t, b), outer, 1e-6);
}

TEST(Fock, OriginIsIdentity) {
    InteractionModel m;
    m.modes.push_back({1.0, 0.1});
    const auto r = evolve_fock(m, 0.0);
    EXPECT_EQ(r.coherence, 1.0);
    EXPECT_EQ(r.global_phase, 0.0);
}

TEST(Fock, SingleModeAnalytic) {
    InteractionModel m;
    m.modes.push_back({1.0, 0.1});
    m.truncation = 16;
    const auto r = evolve_fock(m, std::numbers::pi);
    EXPECT_NEAR(r.coherence, 0.92311634638663578291, 1e-8);
    EXPECT_LT(r.leakage, 1e-8);
    EXPECT_FALSE(r.truncation_flag);
}

TEST(Fock, TwoModesMatchModeSum) {
    InteractionModel m;
    m.modes.push_back({0.7, 0.08});
    m.modes.push_back({1.9, 0.15});
    m.truncation = 16;
    const auto bath = m.to_bath();
    const std::vector<double> times{0.5, 1.5, 3.0, 6.0};
    const auto res = evolve_fock(m, times);
    ASSERT_EQ(res.size(), times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        EXPECT_NEAR(res[i].coherence, std::exp(-gamma_discrete(times[i], bath)), 1e-6);
        EXPECT_LT(res[i].leakage, 1e-8);
    }
}

TEST(Fock, BranchOverlapIgnoresGlobalPhase) {
    InteractionModel m;
    m.modes.push_back({1.0, 0.2});
    const auto br = evolve_fock_branches(m, 2.0);
    const auto ov = branch_overlap(br);
    const auto shifted = branch_overlap(br, 0.4, 0.4);
    EXPECT_NEAR(std::abs(ov - shifted), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(branch_overlap(br, 0.0, 1.0)), std::abs(ov), 1e-15);
}

TEST(Fock, TruncationFlagged) {
    InteractionModel m;
    m.modes.push_back({0.1, 2.0});
    m.truncation = 4;
    const auto r = evolve_fock(m, 10.0, 1e-8);
    EXPECT_TRUE(r.truncation_flag);
}

TEST(Fock, Rejects) {
    InteractionModel m;
    EXPECT_THROW(evolve_fock(m, 1.0), DomainError);
    m.modes.assign(5, DriveMode{1.0, 0.1});
    EXPECT_THROW(evolve_fock(m, 1.0), DomainError);
    m.modes.assign(1, DriveMode{1.0, 0.1});
    m.truncation = 1;
    EXPECT_THROW(evolve_fock(m, 1.0), DomainError);
    m.truncation = 8;
    EXPECT_THROW(evolve_fock(m, std::vector<double>{1.0, 0.5}), DomainError);
    EXPECT_THROW(evolve_fock(m, 1.0, 0.1), DomainError);
}

TEST(Fock, RoundTripToBath) {
    DiscreteBath b;
    b.modes.push_back({1.0, 0.04});
    const auto m = InteractionModel::from_bath(b);
    EXPECT_DOUBLE_EQ(m.modes[0].kappa, 0.1);
    EXPECT_DOUBLE_EQ(m.to_bath().modes[0].weight, 0.04);
}

}  // namespace
}  // namespace acstark::bath
