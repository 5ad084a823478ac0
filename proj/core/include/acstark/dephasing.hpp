#pragma once

#include "acstark/params.hpp"

namespace acstark {

// Markovian scattering rate Γ_M = Γ_s|Ω|²/Δ².
double gamma_markovian(const PhysicalParams& p);
double gamma_markovian(double gamma_s, double omega_rabi, double detuning);

// Suppressed rate Γ_ac = Γ_M/Q². Undefined at Q = 0.
double gamma_ac(double gamma_m, double q);

// Decoherence function Γ(τ) at dimensionless time τ = Γ_M t:
//
//   Γ(τ) = τ/(Q²+1)
//        + [(Q²-1)(1 - e^{-Rτ}cos QRτ) - 2Q e^{-Rτ} sin QRτ] / (2R(Q²+1)²)
//
// Q = 0 is allowed here (Markovian reference curves). For Rτ > kUnderflowGuard
// the exponentials are dropped and the asymptotic affine form is returned.
double gamma_dimensionless(double tau, const DimensionlessParams& d);

// Same function written in physical units, Γ(t) with t in seconds.
double gamma_physical(double t, const PhysicalParams& p);

// Exact value of (R/π)∫_ℝ (1 - cos ωt) / (ω²((ω-ω₀)²+λ²)) dω in the same
// dimensionless variables, i.e. the full-line Lorentzian mode sum:
//
//   Γ_line(τ) = τ/(Q²+1) - Re[(1 - e^{-R(1+iQ)τ}) / (R(1+iQ)²)]
//
// This is what the quadrature and discrete-bath oracles converge to. It agrees
// with gamma_dimensionless in the linear term and carries twice its transient
// term: Γ_line = 2Γ - τ/(Q²+1).
double gamma_full_line(double tau, const DimensionlessParams& d);

// Large-Q form in units of Γ_ac (τ' = Γ_ac t):
//   Γ(τ') ≈ τ' + (1 - e^{-RQ²τ'} cos RQ³τ') / (2RQ²)
double gamma_large_q_approx(double tau_prime, const DimensionlessParams& d);

// dΓ/dτ' of gamma_large_q_approx: 1 + e^{-RQ²τ'}(cos RQ³τ' + Q sin RQ³τ')/2.
double gamma_large_q_slope(double tau_prime, const DimensionlessParams& d);

// Light shift |Ω|²/Δ of the coupled ground state.
double light_shift(double omega_rabi, double detuning);

// e^{-Γ}, with Γ > kCoherenceCutoff reported as exactly zero.
double coherence_from_gamma(double gamma);

inline constexpr double kUnderflowGuard = 700.0;
inline constexpr double kCoherenceCutoff = 700.0;

}  // namespace acstark
