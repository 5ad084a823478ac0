#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace acstark::compare {

// Basis order of the three-level atom.
enum Level : int { kA = 0, kB = 1, kE = 2 };

inline constexpr double kThreeLevelTol = 1e-10;

// 3×3 density matrix over {a, b, e}; validated on construction.
class ThreeLevelState {
public:
    explicit ThreeLevelState(const Eigen::Matrix3cd& rho);

    // |ψ⟩⟨ψ| for ψ = (ca, cb, ce), normalised.
    static ThreeLevelState pure(std::complex<double> ca, std::complex<double> cb, std::complex<double> ce);

    const Eigen::Matrix3cd& matrix() const { return rho_; }
    std::complex<double> operator()(int i, int j) const { return rho_(i, j); }

private:
    Eigen::Matrix3cd rho_;
};

struct LindbladParams {
    double omega_rabi = 0.0;
    double detuning = 0.0;
    double gamma_s = 0.0;
};

struct LindbladTrajectory {
    LindbladParams params;
    std::vector<double> times;
    std::vector<ThreeLevelState> states;
    double max_trace_error = 0.0;
    double min_eigenvalue = 0.0;
};

// dρ/dt = -i[H, ρ] + (Γ_s/2) L[|b⟩⟨e|]ρ with H = Δ|e⟩⟨e| + Ω(|b⟩⟨e| + |e⟩⟨b|)
// and L[O]ρ = 2OρO† - O†Oρ - ρO†O.
//
// The generator is time independent, so each grid step applies the exact
// propagator exp(𝓛 Δt) of the vectorised equation. Every stored state is
// checked for trace, Hermiticity and positivity within kThreeLevelTol; a
// violation throws IntegrationError naming the step.
LindbladTrajectory lindblad_evolve(const ThreeLevelState& rho0, const LindbladParams& p,
                                   const std::vector<double>& t_grid);

struct RateFitOptions {
    double transient_widths = 10.0;     // discard t < transient_widths/|Δ|
    double min_decades = 2.0;           // |ρ_ab| decay required over the fit window
    double residual_threshold = 1e-3;   // RMS of ln|ρ_ab| about the line
};

struct RateFit {
    double rate = 0.0;          // -d ln|ρ_ab|/dt
    double residual_rms = 0.0;
    double decades = 0.0;       // log10 decay of |ρ_ab| across the window
    std::size_t points = 0;
    bool insufficient_decay = false;
    bool non_exponential = false;
};

// Log-linear least squares on |ρ_ab(t)| after the transient window.
// Throws DomainError if fewer than 3 points remain.
RateFit extract_dephasing_rate(const LindbladTrajectory& traj, const RateFitOptions& opts = {});

// Fits the |ρ_ab| decay of (|a⟩ + |b⟩)/√2 under `p` on `points` uniform steps.
// The window starts at min_decades·ln10 over Γ_M = Γ_s|Ω|²/Δ² (only a sizing
// guess) and is doubled until the fit spans min_decades, at most 6 times.
RateFit fit_dephasing_rate(const LindbladParams& p, std::size_t points = 2001, const RateFitOptions& opts = {});

struct ScalingSweep {
    std::string parameter;  // "omega_rabi", "detuning" or "gamma_s"
    std::vector<double> values;
    std::vector<double> rates;
    double exponent = 0.0;  // least-squares slope of ln rate against ln value
};

struct ScalingReport {
    LindbladParams base;
    RateFit base_fit;
    double constant = 0.0;  // fitted rate / (Γ_s|Ω|²/Δ²) at the base point
    std::vector<ScalingSweep> sweeps;
    bool any_flag = false;  // some fit flagged insufficient decay or non-exponential
};

// Scales Ω, Δ and Γ_s one at a time by each factor and fits the rate exponents.
ScalingReport lindblad_scaling(const LindbladParams& base, const std::vector<double>& factors = {1.0, 2.0, 4.0},
                               std::size_t points = 2001);

}  // namespace acstark::compare
