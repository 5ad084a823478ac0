#pragma once

#include <string>
#include <vector>

namespace acstark {

// Laser and atom parameters. All frequencies and rates are angular [rad/s].
struct PhysicalParams {
    double gamma_s = 0.0;     // spontaneous decay rate Γ_s
    double omega_rabi = 0.0;  // laser transition coupling Ω
    double detuning = 0.0;    // Δ
    double omega0 = 0.0;      // laser center frequency ω₀
    double lambda_lw = 0.0;   // Lorentzian HWHM λ
    double alpha0_sq = 0.0;   // peak photon-number density |α₀|²/V [1/m³]; informational
};

// Throws DomainError unless gamma_s > 0, lambda_lw > 0, omega0 >= 0, detuning != 0
// and every field is finite.
void validate(const PhysicalParams& p);

// Soft diagnostics: adiabatic elimination is only trusted for |Δ/Ω| >= 10.
std::vector<std::string> warnings(const PhysicalParams& p);

inline constexpr double kAdiabaticRatioWarn = 10.0;

struct LaserLine {
    double omega0 = 0.0;
    double lambda_lw = 0.0;
};

// Q = ω₀/λ and R = λ/Γ_M, the only two knobs of the dimensionless decoherence function.
struct DimensionlessParams {
    double q = 0.0;
    double r = 1.0;

    // Throws DomainError for Γ_M = 0 (R undefined).
    static DimensionlessParams from_physical(const PhysicalParams& p);

    // Inverse of from_physical for a given Markovian rate.
    LaserLine to_laser(double gamma_m) const;

    double rq2() const { return r * q * q; }
    double rq3() const { return r * q * q * q; }
};

// Throws DomainError unless q >= 0 and r > 0 (both finite).
void validate(const DimensionlessParams& d);

// Angular/ordinary frequency helpers. The library only ever consumes rad/s.
inline constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double hz_to_rad_per_s(double hz) { return kTwoPi * hz; }
constexpr double rad_per_s_to_hz(double w) { return w / kTwoPi; }

}  // namespace acstark
