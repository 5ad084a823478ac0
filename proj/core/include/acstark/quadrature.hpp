#pragma once

#include <cstddef>

#include "acstark/bath.hpp"
#include "acstark/params.hpp"

namespace acstark::bath {

struct QuadratureOptions {
    double rel_tol = 1e-10;  // must lie in (1e-14, 1e-3)
    FrequencyDomain domain = FrequencyDomain::FullLine;
    unsigned max_depth = 8;  // Gauss-Kronrod bisection depth per panel
    std::size_t max_panels = 20'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
    std::size_t panels = 0;
};

// Γ(t) = (Γ_M λ²/π) ∫ (1 - cos ωt) / (ω²((ω-ω₀)² + λ²)) dω, evaluated numerically
// over the full line (or ω > 0 only).
//
// Working variable x = ω/λ, s = λt. Near the origin and across the Lorentzian
// peak the integrand is summed on Gauss-Kronrod panels no wider than π/(4s)
// (an eighth of a period of cos xs); the peak window [Q-5, Q+5] always gets
// at least 32 panels. Beyond |x| ~ max(1, 25/s) the tails are split into a
// smooth part (mapped Gauss-Kronrod) and a Fourier part (Ooura's
// double-exponential rule).
//
// Throws ConvergenceError (with the achieved relative error) when the summed
// error estimate exceeds rel_tol.
QuadratureResult integrate_decoherence(double t, const PhysicalParams& p, const QuadratureOptions& opts = {});

// Same integral in dimensionless form, at τ = Γ_M t.
QuadratureResult integrate_decoherence(double tau, const DimensionlessParams& d,
                                       const QuadratureOptions& opts = {});

double gamma_quadrature(double t, const PhysicalParams& p, double tol,
                        FrequencyDomain domain = FrequencyDomain::FullLine);

}  // namespace acstark::bath
