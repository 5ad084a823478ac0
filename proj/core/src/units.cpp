#include "acstark/units.hpp"

#include <cmath>
#include <string>

#include "acstark/dephasing.hpp"
#include "acstark/error.hpp"

namespace acstark::units {

namespace {

using K = Constants;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive and finite");
}

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

void validate(const DipoleAtom& atom) {
    require_positive(atom.dipole_d, "dipole_d");
    require_positive(atom.omega0, "omega0");
}

double coupling_g(double omega, double g0, double omega0) {
    require_positive(omega, "omega");
    return -(g0 / 2.0) * std::sqrt(omega0 / omega);
}

double gamma_s_standard(const DipoleAtom& atom) {
    validate(atom);
    const double w = atom.omega0;
    return w * w * w * atom.dipole_d * atom.dipole_d / (3.0 * kPi * K::hbar * K::epsilon0 * K::c * K::c * K::c);
}

double dipole_from_gamma_s(double gamma_s, double omega0) {
    require_positive(gamma_s, "gamma_s");
    require_positive(omega0, "omega0");
    return std::sqrt(gamma_s * 3.0 * kPi * K::hbar * K::epsilon0 * K::c * K::c * K::c /
                     (omega0 * omega0 * omega0));
}

double solid_angle_avg_g0sq(const DipoleAtom& atom, double volume) {
    validate(atom);
    require_positive(volume, "volume");
    return 8.0 * kPi * atom.omega0 * atom.dipole_d * atom.dipole_d / (3.0 * K::hbar * K::epsilon0 * volume);
}

double solid_angle_int_g0_4(const DipoleAtom& atom, double volume) {
    validate(atom);
    require_positive(volume, "volume");
    const double d2 = atom.dipole_d * atom.dipole_d;
    const double denom = K::hbar * K::epsilon0 * volume;
    return 16.0 * kPi * atom.omega0 * atom.omega0 * d2 * d2 / (5.0 * denom * denom);
}

double gamma_s_from_g0sq(double g0sq, double volume, double omega0) {
    require_positive(volume, "volume");
    return volume * g0sq * omega0 * omega0 / (8.0 * kPi * kPi * K::c * K::c * K::c);
}

double gamma_m_dipole_route(const DipoleAtom& atom, double alpha0_sq, double volume, double detuning) {
    validate(atom);
    require_positive(volume, "volume");
    if (!(alpha0_sq >= 0.0) || !std::isfinite(alpha0_sq)) throw DomainError("alpha0_sq must be non-negative");
    if (detuning == 0.0 || !std::isfinite(detuning)) throw DomainError("detuning must be nonzero");
    // |α₀|² V ω₀² ∫|g₀|⁴ / (16π⁴c³Δ²): written this way V cancels term by term
    const double w2 = atom.omega0 * atom.omega0;
    const double g4v2 = solid_angle_int_g0_4(atom, 1.0);
    return (alpha0_sq / volume) * w2 * g4v2 / (16.0 * kPi * kPi * kPi * kPi * K::c * K::c * K::c * detuning * detuning);
}

PhysicalParams lab_to_params(const DipoleAtom& atom, const Drive& drive) {
    validate(atom);
    require_positive(drive.linewidth, "linewidth");
    if (drive.detuning == 0.0 || !std::isfinite(drive.detuning)) throw DomainError("detuning must be nonzero");
    if (!drive.omega_rabi && !drive.photon_density) throw DomainError("need omega_rabi or photon_density");

    PhysicalParams p;
    p.gamma_s = gamma_s_standard(atom);
    p.omega0 = atom.omega0;
    p.lambda_lw = drive.linewidth;
    p.detuning = drive.detuning;

    if (drive.photon_density) {
        const double n = *drive.photon_density;
        const double gm_dipole = gamma_m_dipole_route(atom, n, 1.0, drive.detuning);
        const double omega_from_n = std::abs(drive.detuning) * std::sqrt(gm_dipole / p.gamma_s);
        if (drive.omega_rabi) {
            const double gm_given = gamma_markovian(p.gamma_s, *drive.omega_rabi, drive.detuning);
            if (rel_diff(gm_given, gm_dipole) > kOverSpecifiedTol) {
                throw ConsistencyError("omega_rabi and photon_density disagree: Gamma_M " + std::to_string(gm_given) +
                                       " vs " + std::to_string(gm_dipole));
            }
            p.omega_rabi = *drive.omega_rabi;
        } else {
            p.omega_rabi = omega_from_n;
        }
        p.alpha0_sq = n;
        const double gm_direct = gamma_markovian(p.gamma_s, p.omega_rabi, p.detuning);
        if (rel_diff(gm_direct, gm_dipole) > std::max(kRouteAgreementTol, drive.omega_rabi ? kOverSpecifiedTol : 0.0)) {
            throw ConsistencyError("direct and dipole routes to Gamma_M disagree");
        }
    } else {
        p.omega_rabi = *drive.omega_rabi;
        // density implied by the given Ω, so the dipole route can be recomputed
        const double gm_direct = gamma_markovian(p.gamma_s, p.omega_rabi, p.detuning);
        const double per_photon = gamma_m_dipole_route(atom, 1.0, 1.0, drive.detuning);
        p.alpha0_sq = gm_direct / per_photon;
        const double gm_dipole = gamma_m_dipole_route(atom, p.alpha0_sq, 1.0, drive.detuning);
        if (rel_diff(gm_direct, gm_dipole) > kRouteAgreementTol) {
            throw ConsistencyError("direct and dipole routes to Gamma_M disagree");
        }
    }
    validate(p);
    return p;
}

}  // namespace acstark::units
