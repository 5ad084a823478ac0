#pragma once

#include <Eigen/Dense>

namespace acstark {

// Density matrix over the two ground states, basis order {a, b}.
// Construction validates trace, Hermiticity and positivity (tolerance kStateTol).
class QubitState {
public:
    explicit QubitState(const Eigen::Matrix2cd& rho);

    // |ψ⟩⟨ψ| for ψ = ca|a⟩ + cb|b⟩ (normalised internally).
    static QubitState pure(std::complex<double> ca, std::complex<double> cb);

    const Eigen::Matrix2cd& matrix() const { return rho_; }
    std::complex<double> operator()(int i, int j) const { return rho_(i, j); }

    std::complex<double> coherence() const { return rho_(0, 1); }

private:
    Eigen::Matrix2cd rho_;
};

inline constexpr double kStateTol = 1e-12;

// Pure dephasing: ρ^{σσ'} → ρ^{σσ'} exp[-(σ-σ')²Γ/4]. Diagonals untouched,
// off-diagonals scaled by e^{-Γ}. Throws DomainError for Γ < 0.
QubitState apply_dephasing(const QubitState& rho0, double gamma);

}  // namespace acstark
