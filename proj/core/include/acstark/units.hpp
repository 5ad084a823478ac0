#pragma once

#include <optional>

#include "acstark/params.hpp"

namespace acstark::units {

// CODATA 2018 exact/recommended values, SI.
struct Constants {
    static constexpr double hbar = 1.054571817e-34;       // J·s
    static constexpr double epsilon0 = 8.8541878128e-12;  // F/m
    static constexpr double c = 299792458.0;              // m/s (exact)
};

inline constexpr double kPi = 3.141592653589793238462643383279;

struct DipoleAtom {
    double dipole_d = 0.0;  // |d| [C·m]
    double omega0 = 0.0;    // [rad/s]
};

// Throws DomainError unless both fields are positive and finite.
void validate(const DipoleAtom& atom);

// g_k = -(g₀/2)·sqrt(ω₀/ω).
double coupling_g(double omega, double g0, double omega0);

// Γ_s = ω₀³|d|²/(3πħε₀c³).
double gamma_s_standard(const DipoleAtom& atom);

// Inverse of gamma_s_standard for |d|.
double dipole_from_gamma_s(double gamma_s, double omega0);

// Solid-angle integral of |g₀|² over the dipole orientation: 8πω₀|d|²/(3ħε₀V).
double solid_angle_avg_g0sq(const DipoleAtom& atom, double volume);

// Same integral of |g₀|⁴: 16πω₀²|d|⁴/(5ħ²ε₀²V²).
double solid_angle_int_g0_4(const DipoleAtom& atom, double volume);

// Wigner–Weisskopf: Γ_s = V⟨|g₀|²⟩ω₀²/(8π²c³).
double gamma_s_from_g0sq(double g0sq, double volume, double omega0);

// Γ_s|Ω|²/Δ² through the dipole moment: ω₀⁴|α₀|²|d|⁴/(5π³ε₀²ħ²c³VΔ²).
// alpha0_sq is the photon number |α₀|² in the quantisation volume V.
double gamma_m_dipole_route(const DipoleAtom& atom, double alpha0_sq, double volume, double detuning);

// Exactly one of omega_rabi / photon_density is normally given; giving both
// requires them to agree (see lab_to_params).
struct Drive {
    double linewidth = 0.0;                 // λ [rad/s]
    double detuning = 0.0;                  // Δ [rad/s]
    std::optional<double> omega_rabi;       // Ω [rad/s]
    std::optional<double> photon_density;   // |α₀|²/V [1/m³]
};

inline constexpr double kOverSpecifiedTol = 1e-6;
inline constexpr double kRouteAgreementTol = 1e-10;

// Builds PhysicalParams with gamma_s = gamma_s_standard(atom) and ω₀ from the atom.
// A photon density is turned into Ω through |Ω|² = Γ_M^dipole·Δ²/Γ_s. When both Ω
// and a density are given and disagree in Γ_M by more than kOverSpecifiedTol
// relative, throws ConsistencyError. The direct and dipole routes to Γ_M are
// always recomputed and must agree to kRouteAgreementTol.
PhysicalParams lab_to_params(const DipoleAtom& atom, const Drive& drive);

}  // namespace acstark::units
