#include "acstark/qubit_state.hpp"

#include <cmath>

#include "acstark/dephasing.hpp"
#include "acstark/error.hpp"

namespace acstark {

QubitState::QubitState(const Eigen::Matrix2cd& rho) : rho_(rho) {
    if (!rho_.allFinite()) throw DomainError("density matrix has non-finite entries");
    if (std::abs(rho_.trace() - 1.0) > kStateTol) throw DomainError("density matrix trace must be 1");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
        throw DomainError("density matrix must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(rho_);
    if (eig.eigenvalues().minCoeff() < -kStateTol) {
        throw DomainError("density matrix must be positive semidefinite");
    }
}

QubitState QubitState::pure(std::complex<double> ca, std::complex<double> cb) {
    Eigen::Vector2cd psi(ca, cb);
    const double n = psi.norm();
    if (!(n > 0.0)) throw DomainError("state vector must be nonzero");
    psi /= n;
    return QubitState(psi * psi.adjoint());
}

QubitState apply_dephasing(const QubitState& rho0, double gamma) {
    if (std::isnan(gamma) || gamma < 0.0) throw DomainError("gamma must be non-negative");
    Eigen::Matrix2cd out = rho0.matrix();
    const double damp = coherence_from_gamma(gamma);
    out(0, 1) *= damp;
    out(1, 0) *= damp;
    return QubitState(out);
}

}  // namespace acstark
