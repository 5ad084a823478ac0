#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "acstark/bath.hpp"

namespace acstark::bath {

// Displaced-bath interaction picture: H_I(t) = -Σ_k κ_k σ^z (q_k† e^{iω_k t} + h.c.)
// with κ_k = |g_k|²|α_k|/Δ. One mode contributes w_k = 4κ_k² to Γ.
struct DriveMode {
    double omega = 0.0;
    double kappa = 0.0;
};

struct InteractionModel {
    std::vector<DriveMode> modes;
    std::size_t truncation = 16;  // Fock levels kept per mode (0 .. truncation-1)

    // κ_k = sqrt(w_k)/2 for every mode of `bath`.
    static InteractionModel from_bath(const DiscreteBath& bath, std::size_t truncation = 16);

    // The same modes as a DiscreteBath (w_k = 4κ_k²), for the mode-sum oracle.
    DiscreteBath to_bath() const;
};

inline constexpr std::size_t kMaxFockModes = 4;
inline constexpr std::size_t kMaxTruncation = 64;
inline constexpr std::size_t kMaxFockDimension = std::size_t{1} << 22;
inline constexpr double kLeakageFlag = 1e-6;

// Product-space states of the σ = -1 and σ = +1 branches.
struct FockBranches {
    std::vector<std::complex<double>> minus;
    std::vector<std::complex<double>> plus;
};

struct FockResult {
    double time = 0.0;
    double coherence = 1.0;       // |⟨ψ₋|ψ₊⟩|, compare with exp(-Γ_discrete)
    double relative_phase = 0.0;  // arg⟨ψ₋|ψ₊⟩
    double global_phase = 0.0;    // arg⟨0|ψ₊⟩ (the c-number phase of U(t))
    double leakage = 0.0;         // largest top-level Fock population seen
    bool truncation_flag = false;  // leakage > kLeakageFlag
    std::size_t steps = 0;
};

// Integrates i dψ_σ/dt = H_σ(t) ψ_σ for σ = ±1 from the multimode vacuum with an
// adaptive Dormand-Prince stepper (relative and absolute tolerance ode_tol).
// Throws DomainError for more than kMaxFockModes modes or truncation outside
// [2, kMaxTruncation], IntegrationError if the stepper fails.
FockResult evolve_fock(const InteractionModel& model, double t, double ode_tol = 1e-10);

// One integration pass reporting at each time of an increasing grid.
std::vector<FockResult> evolve_fock(const InteractionModel& model, const std::vector<double>& times,
                                    double ode_tol = 1e-10);

// Branch states at time t, for inspecting the overlap directly.
FockBranches evolve_fock_branches(const InteractionModel& model, double t, double ode_tol = 1e-10);

// ⟨ψ₋|ψ₊⟩ after multiplying the branches by e^{iφ₋} and e^{iφ₊}.
std::complex<double> branch_overlap(const FockBranches& b, double phase_minus = 0.0, double phase_plus = 0.0);

}  // namespace acstark::bath
