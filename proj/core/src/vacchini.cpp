#include "acstark/vacchini.hpp"

#include <cmath>
#include <string>

#include "acstark/error.hpp"

namespace acstark::compare {

namespace {

std::complex<double> sinhc(std::complex<double> z) {
    if (std::abs(z) < 1e-3) {
        const auto z2 = z * z;
        return 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0));
    }
    return std::sinh(z) / z;
}

}  // namespace

VacchiniParams VacchiniParams::make(double lambda_lw, double gamma_s) {
    if (!(lambda_lw > 0.0) || !std::isfinite(lambda_lw)) throw DomainError("lambda must be positive");
    if (!(gamma_s >= 0.0) || !std::isfinite(gamma_s)) throw DomainError("gamma_s must be non-negative");
    return {lambda_lw, gamma_s, std::sqrt(std::complex<double>(1.0 - 2.0 * gamma_s / lambda_lw, 0.0))};
}

double vacchini_rho_ee(double t, const VacchiniParams& v, double rho_ee0) {
    if (!(t >= 0.0)) throw DomainError("t must be non-negative");
    const double x = v.lambda_lw * t / 2.0;
    const std::complex<double> z = x * v.delta;
    std::complex<double> val;
    if (z.real() > 30.0) {
        // cosh z + sinh z/δ → e^{z}(1 + 1/δ)/2 once e^{-2z} is below rounding
        const auto amp = (1.0 + 1.0 / v.delta) / 2.0;
        val = std::exp(2.0 * z - v.lambda_lw * t) * amp * amp * rho_ee0;
    } else {
        // sinh(xδ)/δ = x·sinhc(xδ) stays finite as δ → 0
        const auto bracket = std::cosh(z) + x * sinhc(z);
        val = std::exp(-v.lambda_lw * t) * bracket * bracket * rho_ee0;
    }
    if (std::abs(val.imag()) > 1e-9 * std::max(1.0, std::abs(rho_ee0))) {
        throw ConsistencyError("vacchini_rho_ee has imaginary residue " + std::to_string(val.imag()));
    }
    return val.real();
}

WeakLimit vacchini_weak_limit(double t, const VacchiniParams& v, double rho_ee0) {
    if (!(t >= 0.0)) throw DomainError("t must be non-negative");
    return {std::exp(-v.gamma_s * t / 2.0) * rho_ee0, v.gamma_s / v.lambda_lw <= kWeakCouplingMax};
}

double omega_nm(const VacchiniParams& v) { return std::sqrt(v.lambda_lw * v.gamma_s / 2.0); }

double naive_ac_rate(double lambda_lw, double omega_rabi, double detuning) {
    if (detuning == 0.0 || !std::isfinite(detuning)) throw DomainError("detuning must be nonzero");
    const double ratio = omega_rabi / detuning;
    return lambda_lw * ratio * ratio;
}

}  // namespace acstark::compare
