#include "acstark/lindblad.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "acstark/error.hpp"

namespace acstark::compare {

namespace {

using Matrix9cd = Eigen::Matrix<std::complex<double>, 9, 9>;
using Vector9cd = Eigen::Matrix<std::complex<double>, 9, 1>;
// propagation runs in extended precision; one step's rounding would otherwise
// drift the trace by ~1e-13 and fail the 1e-10 check after ~1000 steps
using Matrix9cl = Eigen::Matrix<std::complex<long double>, 9, 9>;
using Vector9cl = Eigen::Matrix<std::complex<long double>, 9, 1>;

struct Check {
    double trace_error = 0.0;
    double hermitian_error = 0.0;
    double min_eigenvalue = 0.0;
};

Check inspect(const Eigen::Matrix3cd& rho) {
    Check c;
    c.trace_error = std::abs(rho.trace() - 1.0);
    c.hermitian_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const Eigen::Matrix3cd herm = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> eig(herm, Eigen::EigenvaluesOnly);
    c.min_eigenvalue = eig.eigenvalues().minCoeff();
    return c;
}

// vec(AρB) = (Bᵀ ⊗ A) vec(ρ), column-major vec.
Matrix9cd generator(const LindbladParams& p) {
    using Eigen::kroneckerProduct;
    const Eigen::Matrix3cd id = Eigen::Matrix3cd::Identity();
    Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
    h(kE, kE) = p.detuning;
    h(kB, kE) = p.omega_rabi;
    h(kE, kB) = p.omega_rabi;
    Eigen::Matrix3cd jump = Eigen::Matrix3cd::Zero();
    jump(kB, kE) = 1.0;
    const Eigen::Matrix3cd jj = jump.adjoint() * jump;
    const std::complex<double> i{0.0, 1.0};

    Matrix9cd l = -i * (kroneckerProduct(id, h) - kroneckerProduct(h.transpose(), id)).eval();
    l += (p.gamma_s / 2.0) * (2.0 * kroneckerProduct(jump.conjugate(), jump) - kroneckerProduct(id, jj) -
                              kroneckerProduct(jj.transpose(), id))
                                 .eval();
    return l;
}

std::string fmt_failure(std::size_t k, const Check& c) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "Lindblad propagation lost trace/Hermiticity/positivity at step %zu "
                  "(trace error %.3e, Hermiticity error %.3e, min eigenvalue %.3e)",
                  k, c.trace_error, c.hermitian_error, c.min_eigenvalue);
    return buf;
}

}  // namespace

ThreeLevelState::ThreeLevelState(const Eigen::Matrix3cd& rho) : rho_(rho) {
    if (!rho_.allFinite()) throw DomainError("density matrix has non-finite entries");
    const Check c = inspect(rho_);
    if (c.trace_error > kThreeLevelTol) throw DomainError("density matrix trace must be 1");
    if (c.hermitian_error > kThreeLevelTol) throw DomainError("density matrix must be Hermitian");
    if (c.min_eigenvalue < -kThreeLevelTol) throw DomainError("density matrix must be positive semidefinite");
}

ThreeLevelState ThreeLevelState::pure(std::complex<double> ca, std::complex<double> cb, std::complex<double> ce) {
    Eigen::Vector3cd psi(ca, cb, ce);
    const double n = psi.norm();
    if (!(n > 0.0)) throw DomainError("state vector must be nonzero");
    psi /= n;
    return ThreeLevelState(psi * psi.adjoint());
}

LindbladTrajectory lindblad_evolve(const ThreeLevelState& rho0, const LindbladParams& p,
                                   const std::vector<double>& t_grid) {
    if (!std::isfinite(p.omega_rabi) || !std::isfinite(p.detuning) || !std::isfinite(p.gamma_s) ||
        p.gamma_s < 0.0) {
        throw DomainError("Lindblad parameters must be finite with gamma_s >= 0");
    }
    if (t_grid.empty()) throw DomainError("time grid is empty");
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        if (!(t_grid[k] > t_grid[k - 1])) throw DomainError("time grid must increase");
    }
    if (!(t_grid.front() >= 0.0)) throw DomainError("time grid must start at t >= 0");

    // 𝓛 = V diag(μ) V⁻¹, so exp(𝓛Δt) stays accurate for |μΔt| far above 1
    Eigen::ComplexEigenSolver<Matrix9cl> eig(generator(p).cast<std::complex<long double>>());
    if (eig.info() != Eigen::Success) throw IntegrationError("Lindblad generator diagonalisation failed", 0.0, 0);
    const Matrix9cl vecs = eig.eigenvectors();
    const Matrix9cl vinv = vecs.inverse();
    const Vector9cl mu = eig.eigenvalues();
    LindbladTrajectory traj;
    traj.params = p;
    traj.times = t_grid;
    traj.states.reserve(t_grid.size());

    Vector9cl v = Eigen::Map<const Vector9cd>(rho0.matrix().data()).cast<std::complex<long double>>();
    double last_dt = -1.0;
    Matrix9cl step;
    double t = 0.0;
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        const double dt = t_grid[k] - t;
        if (dt > 0.0) {
            if (std::abs(dt - last_dt) > 1e-12 * dt) {
                step = vecs * (mu * static_cast<long double>(dt)).array().exp().matrix().asDiagonal() * vinv;
                last_dt = dt;
            }
            v = step * v;
        }
        t = t_grid[k];
        const Vector9cd vd = v.cast<std::complex<double>>();
        Eigen::Matrix3cd rho = Eigen::Map<const Eigen::Matrix3cd>(vd.data());
        const Check c = inspect(rho);
        traj.max_trace_error = std::max(traj.max_trace_error, c.trace_error);
        traj.min_eigenvalue = k == 0 ? c.min_eigenvalue : std::min(traj.min_eigenvalue, c.min_eigenvalue);
        if (c.trace_error > kThreeLevelTol || c.hermitian_error > kThreeLevelTol ||
            c.min_eigenvalue < -kThreeLevelTol || !rho.allFinite()) {
            throw IntegrationError(fmt_failure(k, c),
                                   t, k);
        }
        // re-Hermitise to keep rounding from accumulating asymmetrically
        Eigen::Map<Eigen::Matrix<std::complex<long double>, 3, 3>> rl(v.data());
        rl = (rl + rl.adjoint()).eval() / 2.0L;
        traj.states.emplace_back((rho + rho.adjoint()).eval() / 2.0);
    }
    return traj;
}

RateFit extract_dephasing_rate(const LindbladTrajectory& traj, const RateFitOptions& opts) {
    const double t_skip = traj.params.detuning != 0.0 ? opts.transient_widths / std::abs(traj.params.detuning) : 0.0;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        if (traj.times[k] < t_skip) continue;
        const double mag = std::abs(traj.states[k](kA, kB));
        if (!(mag > 0.0)) continue;
        xs.push_back(traj.times[k]);
        ys.push_back(std::log(mag));
    }
    if (xs.size() < 3) throw DomainError("rate fit needs at least 3 points after the transient window");
    const double n = static_cast<double>(xs.size());
    // centre t for conditioning
    const double t0 = xs.front();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double x = xs[k] - t0;
        sx += x;
        sy += ys[k];
        sxx += x * x;
        sxy += x * ys[k];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double r = ys[k] - (icept + slope * (xs[k] - t0));
        ss += r * r;
    }
    RateFit fit;
    fit.rate = -slope;
    fit.residual_rms = std::sqrt(ss / n);
    fit.decades = (ys.front() - ys.back()) / std::log(10.0);
    fit.points = xs.size();
    fit.insufficient_decay = fit.decades < opts.min_decades;
    fit.non_exponential = fit.residual_rms > opts.residual_threshold;
    return fit;
}

RateFit fit_dephasing_rate(const LindbladParams& p, std::size_t points, const RateFitOptions& opts) {
    if (points < 10) throw DomainError("rate fit needs at least 10 grid points");
    if (p.detuning == 0.0 || p.omega_rabi == 0.0 || !(p.gamma_s > 0.0)) {
        throw DomainError("rate fit needs nonzero omega_rabi, detuning and gamma_s");
    }
    const double ratio = p.omega_rabi / p.detuning;
    double t_max = opts.min_decades * std::log(10.0) / (p.gamma_s * ratio * ratio);
    const auto rho0 = ThreeLevelState::pure(1.0, 1.0, 0.0);
    RateFit fit;
    for (int attempt = 0; attempt < 7; ++attempt) {
        std::vector<double> grid(points);
        for (std::size_t i = 0; i < points; ++i) grid[i] = t_max * static_cast<double>(i) / (points - 1);
        fit = extract_dephasing_rate(lindblad_evolve(rho0, p, grid), opts);
        if (!fit.insufficient_decay) break;
        t_max *= 2.0;
    }
    return fit;
}

ScalingReport lindblad_scaling(const LindbladParams& base, const std::vector<double>& factors, std::size_t points) {
    if (factors.size() < 2) throw DomainError("scaling sweep needs at least two factors");
    ScalingReport rep;
    rep.base = base;
    rep.base_fit = fit_dephasing_rate(base, points);
    const double ratio = base.omega_rabi / base.detuning;
    rep.constant = rep.base_fit.rate / (base.gamma_s * ratio * ratio);
    rep.any_flag = rep.base_fit.insufficient_decay || rep.base_fit.non_exponential;

    const char* names[] = {"omega_rabi", "detuning", "gamma_s"};
    for (int which = 0; which < 3; ++which) {
        ScalingSweep sw;
        sw.parameter = names[which];
        for (double f : factors) {
            LindbladParams p = base;
            double* field = which == 0 ? &p.omega_rabi : which == 1 ? &p.detuning : &p.gamma_s;
            *field *= f;
            const RateFit fit = fit_dephasing_rate(p, points);
            rep.any_flag = rep.any_flag || fit.insufficient_decay || fit.non_exponential;
            sw.values.push_back(*field);
            sw.rates.push_back(fit.rate);
        }
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double n = static_cast<double>(sw.values.size());
        for (std::size_t i = 0; i < sw.values.size(); ++i) {
            const double x = std::log(sw.values[i]);
            const double y = std::log(sw.rates[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        sw.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        rep.sweeps.push_back(std::move(sw));
    }
    return rep;
}

}  // namespace acstark::compare
