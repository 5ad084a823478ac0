#pragma once

#include <complex>

namespace acstark::compare {

// Lorentzian-bath spontaneous decay: λ is the bath width, Γ_s the Markovian
// decay rate and δ = sqrt(1 - 2Γ_s/λ), kept complex (imaginary once Γ_s > λ/2).
struct VacchiniParams {
    double lambda_lw = 0.0;
    double gamma_s = 0.0;
    std::complex<double> delta;

    // Throws DomainError unless λ > 0 and Γ_s >= 0.
    static VacchiniParams make(double lambda_lw, double gamma_s);
};

// ρ_ee(t) = e^{-λt}[cosh(λtδ/2) + sinh(λtδ/2)/δ]² ρ_ee(0), in complex arithmetic.
// Continuous through δ = 0. Throws ConsistencyError if the imaginary residue
// exceeds 1e-9·ρ_ee(0).
double vacchini_rho_ee(double t, const VacchiniParams& v, double rho_ee0 = 1.0);

struct WeakLimit {
    double value = 0.0;
    bool in_regime = true;  // Γ_s/λ <= kWeakCouplingMax
};

inline constexpr double kWeakCouplingMax = 0.01;

// e^{-Γ_s t/2} ρ_ee(0), the weak-coupling form quoted alongside the decay law.
WeakLimit vacchini_weak_limit(double t, const VacchiniParams& v, double rho_ee0 = 1.0);

// Strong-coupling oscillation frequency Ω_NM = sqrt(λΓ_s/2).
double omega_nm(const VacchiniParams& v);

// λ|Ω|²/Δ²: the rate obtained by putting Γ_s = λ into the Markovian formula.
double naive_ac_rate(double lambda_lw, double omega_rabi, double detuning);

}  // namespace acstark::compare
