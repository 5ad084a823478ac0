#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acstark/params.hpp"

namespace acstark::bath {

// Which part of the frequency axis the Lorentzian is integrated over. The
// closed forms correspond to the full line; physical photon modes only exist
// for ω > 0, and the gap between the two is reported rather than hidden.
enum class FrequencyDomain { FullLine, PositiveLine };

std::string to_string(FrequencyDomain d);

// One bath mode: frequency ω_k [rad/s] and effective weight
// w_k = 4|g_k|⁴|α_k|²/Δ² [rad²/s²], so that Γ(t) = Σ w_k (1 - cos ω_k t)/ω_k².
struct BathMode {
    double omega = 0.0;
    double weight = 0.0;
};

struct SamplingMeta {
    std::string rule = "midpoint";
    FrequencyDomain domain = FrequencyDomain::FullLine;
    double omega_min = 0.0;
    double omega_max = 0.0;
    double spacing = 0.0;
    double cutoff_widths = 0.0;
    std::size_t requested_modes = 0;
    std::size_t zero_nodes = 0;  // nodes snapped onto ω = 0
};

struct DiscreteBath {
    std::vector<BathMode> modes;
    SamplingMeta meta;

    double total_weight() const;
};

// Uniform midpoint grid over [ω₀ - cutoff·λ, ω₀ + cutoff·λ] (clipped to ω > 0
// for PositiveLine) with w_k = (Γ_M λ²/π) Δω / ((ω_k-ω₀)² + λ²).
// A node landing on ω = 0 (to rounding) is placed exactly there and keeps its
// weight. Needs n_modes >= 2 and cutoff_widths >= 10.
DiscreteBath sample_lorentzian_bath(const PhysicalParams& p, std::size_t n_modes, double cutoff_widths,
                                    FrequencyDomain domain = FrequencyDomain::FullLine);

// Γ(t) = Σ_k w_k (1 - cos ω_k t)/ω_k². Non-negative; t >= 0.
double gamma_discrete(double t, const DiscreteBath& bath);

// Commutator function Φ(t) = Σ_k (w_k/4) sin ω_k t. Odd in t.
double phase_phi(double t, const DiscreteBath& bath);

// c-number phase ∫₀ᵗ dt₁ ∫₀^{t₁} dt₂ Φ(t₁-t₂) = Σ_k (w_k/4)(t - sin(ω_k t)/ω_k)/ω_k.
// Identical for both σ^z branches, so it never reaches the reduced state.
double global_phase(double t, const DiscreteBath& bath);

}  // namespace acstark::bath
