#include "acstark/dephasing.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "acstark/error.hpp"

namespace acstark {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be finite");
    }
}

void require_detuning(double detuning) {
    require_finite(detuning, "detuning");
    if (detuning == 0.0) {
        throw DomainError("detuning must be nonzero");
    }
}

}  // namespace

void validate(const PhysicalParams& p) {
    require_finite(p.gamma_s, "gamma_s");
    require_finite(p.omega_rabi, "omega_rabi");
    require_finite(p.omega0, "omega0");
    require_finite(p.lambda_lw, "lambda_lw");
    require_finite(p.alpha0_sq, "alpha0_sq");
    require_detuning(p.detuning);
    if (!(p.gamma_s > 0.0)) throw DomainError("gamma_s must be positive");
    if (!(p.lambda_lw > 0.0)) throw DomainError("lambda_lw must be positive");
    if (p.omega0 < 0.0) throw DomainError("omega0 must be non-negative");
    if (p.alpha0_sq < 0.0) throw DomainError("alpha0_sq must be non-negative");
}

std::vector<std::string> warnings(const PhysicalParams& p) {
    std::vector<std::string> out;
    if (p.omega_rabi != 0.0 && std::abs(p.detuning / p.omega_rabi) < kAdiabaticRatioWarn) {
        out.push_back("|detuning/omega_rabi| = " + std::to_string(std::abs(p.detuning / p.omega_rabi)) +
                      " is below 10; adiabatic elimination is not reliable");
    }
    return out;
}

void validate(const DimensionlessParams& d) {
    require_finite(d.q, "q");
    require_finite(d.r, "r");
    if (d.q < 0.0) throw DomainError("q must be non-negative");
    if (!(d.r > 0.0)) throw DomainError("r must be positive");
}

DimensionlessParams DimensionlessParams::from_physical(const PhysicalParams& p) {
    validate(p);
    const double gm = gamma_markovian(p);
    if (!(gm > 0.0)) {
        throw DomainError("Markovian rate is zero; R = lambda/Gamma_M is undefined");
    }
    return {p.omega0 / p.lambda_lw, p.lambda_lw / gm};
}

LaserLine DimensionlessParams::to_laser(double gamma_m) const {
    validate(*this);
    if (!(gamma_m > 0.0)) throw DomainError("gamma_m must be positive");
    const double lambda = r * gamma_m;
    return {q * lambda, lambda};
}

double gamma_markovian(double gamma_s, double omega_rabi, double detuning) {
    require_detuning(detuning);
    const double ratio = omega_rabi / detuning;
    return gamma_s * ratio * ratio;
}

double gamma_markovian(const PhysicalParams& p) {
    validate(p);
    return gamma_markovian(p.gamma_s, p.omega_rabi, p.detuning);
}

double gamma_ac(double gamma_m, double q) {
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw DomainError("gamma_ac needs Q > 0; the Markovian limit Q = 0 has no suppressed rate");
    }
    return gamma_m / (q * q);
}

double gamma_dimensionless(double tau, const DimensionlessParams& d) {
    validate(d);
    if (!(tau >= 0.0)) throw DomainError("tau must be non-negative");
    // With c = 1 + iQ and x = Rcτ the trigonometric form is
    //   Γ = τ/(Q²+1) - Re[(1 - e^{-x})/(2Rc²)] = (τ/(Q²+1) + Γ_line)/2.
    // The right-hand form adds two non-negative terms, so small Rτ loses no
    // digits to the 1 - e^{-Rτ}cos QRτ cancellation of the trigonometric form.
    const double linear = tau / (d.q * d.q + 1.0);
    return 0.5 * (linear + gamma_full_line(tau, d));
}

double gamma_physical(double t, const PhysicalParams& p) {
    validate(p);
    if (!(t >= 0.0)) throw DomainError("t must be non-negative");
    const double gm = gamma_markovian(p);
    if (gm == 0.0) return 0.0;
    return gamma_dimensionless(gm * t, DimensionlessParams::from_physical(p));
}

double gamma_full_line(double tau, const DimensionlessParams& d) {
    validate(d);
    if (!(tau >= 0.0)) throw DomainError("tau must be non-negative");
    const double q = d.q;
    const double q2p1 = q * q + 1.0;
    const double s = d.r * tau;
    if (s * std::sqrt(q2p1) < 0.1) {
        // Σ_{k>=2} (-x)^k/k! / (Rc²) with x^k/c² = (Rτ)^k c^{k-2}, so no division by c²
        const std::complex<double> c{1.0, q};
        std::complex<double> cpow{1.0, 0.0};
        double term = s * s / 2.0;
        double sum = 0.0;
        for (int k = 2; k < 40; ++k) {
            const double piece = term * cpow.real();
            sum += piece;
            if (std::abs(term) * std::abs(cpow) <= 1e-18 * std::abs(sum)) break;
            term *= -s / static_cast<double>(k + 1);
            cpow *= c;
        }
        return std::max(0.0, sum / d.r);
    }
    // τ/(Q²+1) - Re[(1 - e^{-x})/(Rc²)] in real arithmetic; 1/c² = (1 - Q² - 2iQ)/(Q²+1)²
    const double damp = s > kUnderflowGuard ? 0.0 : std::exp(-s);
    const double phase = q * s;
    const double a = 1.0 - damp * std::cos(phase);
    const double b = damp * std::sin(phase);
    const double re = ((1.0 - q * q) * a + 2.0 * q * b) / (q2p1 * q2p1);
    return std::max(0.0, tau / q2p1 - re / d.r);
}

double gamma_large_q_approx(double tau_prime, const DimensionlessParams& d) {
    validate(d);
    if (d.q < 1.0) throw DomainError("large-Q approximation needs Q >= 1");
    if (!(tau_prime >= 0.0)) throw DomainError("tau_prime must be non-negative");
    const double rq2 = d.rq2();
    const double decay = rq2 * tau_prime;
    const double osc = decay > kUnderflowGuard ? 0.0 : std::exp(-decay) * std::cos(d.rq3() * tau_prime);
    return tau_prime + (1.0 - osc) / (2.0 * rq2);
}

double gamma_large_q_slope(double tau_prime, const DimensionlessParams& d) {
    validate(d);
    if (!(tau_prime >= 0.0)) throw DomainError("tau_prime must be non-negative");
    const double decay = d.rq2() * tau_prime;
    if (decay > kUnderflowGuard) return 1.0;
    const double phase = d.rq3() * tau_prime;
    return 1.0 + std::exp(-decay) * (std::cos(phase) + d.q * std::sin(phase)) / 2.0;
}

double light_shift(double omega_rabi, double detuning) {
    require_detuning(detuning);
    require_finite(omega_rabi, "omega_rabi");
    return omega_rabi * omega_rabi / detuning;
}

double coherence_from_gamma(double gamma) {
    if (std::isnan(gamma) || gamma < 0.0) throw DomainError("gamma must be non-negative");
    if (gamma > kCoherenceCutoff) return 0.0;
    return std::exp(-gamma);
}

}  // namespace acstark
