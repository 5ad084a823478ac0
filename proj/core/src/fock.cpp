#include "acstark/fock.hpp"

#include <cmath>
#include <exception>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "acstark/error.hpp"

namespace acstark::bath {

namespace {

using State = std::vector<std::complex<double>>;
namespace odeint = boost::numeric::odeint;

struct Layout {
    std::size_t levels = 0;
    std::size_t dim = 1;
    std::vector<std::size_t> stride;
};

Layout make_layout(const InteractionModel& model) {
    if (model.modes.empty()) throw DomainError("interaction model has no modes");
    if (model.modes.size() > kMaxFockModes) throw DomainError("at most 4 modes are supported");
    if (model.truncation < 2 || model.truncation > kMaxTruncation) {
        throw DomainError("truncation must lie in [2, 64]");
    }
    Layout lay;
    lay.levels = model.truncation;
    for (const auto& m : model.modes) {
        if (!(m.kappa >= 0.0) || !std::isfinite(m.kappa) || !std::isfinite(m.omega)) {
            throw DomainError("mode kappa must be finite and non-negative");
        }
        lay.stride.push_back(lay.dim);
        if (lay.dim > kMaxFockDimension / lay.levels) throw DomainError("Fock space too large");
        lay.dim *= lay.levels;
    }
    return lay;
}

// dψ/dt = iσ Σ κ_k (e^{iω_k t} a_k† + e^{-iω_k t} a_k) ψ for both stacked branches.
class Rhs {
public:
    Rhs(const InteractionModel& model, const Layout& lay) : model_(model), lay_(lay) {
        sqrt_n_.resize(lay.levels);
        for (std::size_t n = 0; n < lay.levels; ++n) sqrt_n_[n] = std::sqrt(static_cast<double>(n));
    }

    void operator()(const State& x, State& dxdt, double t) const {
        std::fill(dxdt.begin(), dxdt.end(), std::complex<double>{});
        const std::size_t dim = lay_.dim;
        for (std::size_t k = 0; k < model_.modes.size(); ++k) {
            const auto& mode = model_.modes[k];
            const std::complex<double> up = std::complex<double>{0.0, 1.0} * mode.kappa *
                                            std::polar(1.0, mode.omega * t);
            const std::complex<double> down = std::complex<double>{0.0, 1.0} * mode.kappa *
                                              std::polar(1.0, -mode.omega * t);
            const std::size_t stride = lay_.stride[k];
            for (int branch = 0; branch < 2; ++branch) {
                const double sigma = branch == 0 ? -1.0 : 1.0;
                const std::size_t off = branch * dim;
                for (std::size_t i = 0; i < dim; ++i) {
                    const std::size_t n = (i / stride) % lay_.levels;
                    std::complex<double> acc{};
                    if (n > 0) acc += up * sqrt_n_[n] * x[off + i - stride];  // a† from n-1
                    if (n + 1 < lay_.levels) acc += down * sqrt_n_[n + 1] * x[off + i + stride];  // a from n+1
                    dxdt[off + i] += sigma * acc;
                }
            }
        }
    }

private:
    const InteractionModel& model_;
    const Layout& lay_;
    std::vector<double> sqrt_n_;
};

double top_level_population(const State& x, const Layout& lay, std::size_t offset) {
    double pop = 0.0;
    for (std::size_t i = 0; i < lay.dim; ++i) {
        for (std::size_t k = 0; k < lay.stride.size(); ++k) {
            if ((i / lay.stride[k]) % lay.levels == lay.levels - 1) {
                pop += std::norm(x[offset + i]);
                break;
            }
        }
    }
    return pop;
}

FockResult summarise(const State& x, const Layout& lay, double t, double leakage) {
    FockBranches b{State(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(lay.dim)),
                   State(x.begin() + static_cast<std::ptrdiff_t>(lay.dim), x.end())};
    const auto ov = branch_overlap(b);
    FockResult r;
    r.time = t;
    r.coherence = std::abs(ov);
    r.relative_phase = std::arg(ov);
    r.global_phase = std::arg(b.plus[0]);
    r.leakage = leakage;
    r.truncation_flag = leakage > kLeakageFlag;
    return r;
}

template <class Observer>
std::size_t integrate(const InteractionModel& model, const Layout& lay, State& x, const std::vector<double>& times,
                      double ode_tol, Observer&& observe) {
    if (!(ode_tol > 0.0 && ode_tol < 1e-2)) throw DomainError("ode_tol must lie in (0, 1e-2)");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
            throw DomainError("Fock evaluation times must be non-negative and increasing");
        }
    }
    Rhs rhs(model, lay);
    std::size_t steps = 0;
    double last_t = 0.0;
    auto stepper = odeint::make_controlled(ode_tol, ode_tol, odeint::runge_kutta_dopri5<State>());
    std::vector<double> grid;
    grid.reserve(times.size() + 1);
    if (times.empty() || times.front() > 0.0) grid.push_back(0.0);
    grid.insert(grid.end(), times.begin(), times.end());

    double omega_max = 0.0;
    double kappa_max = 0.0;
    for (const auto& m : model.modes) {
        omega_max = std::max(omega_max, std::abs(m.omega));
        kappa_max = std::max(kappa_max, m.kappa);
    }
    const double rate = std::max(omega_max, kappa_max * std::sqrt(static_cast<double>(lay.levels)));
    const double dt0 = rate > 0.0 ? 0.01 / rate : 1e-3;
    try {
        steps = odeint::integrate_times(
            stepper, std::ref(rhs), x, grid.begin(), grid.end(), dt0,
            [&](const State& s, double t) {
                last_t = t;
                observe(s, t);
            },
            odeint::max_step_checker(100'000'000));
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception& e) {
        throw IntegrationError(std::string("Fock integration failed: ") + e.what(), last_t, steps);
    }
    return steps;
}

State vacuum(const Layout& lay) {
    State x(2 * lay.dim);
    x[0] = 1.0;
    x[lay.dim] = 1.0;
    return x;
}

}  // namespace

InteractionModel InteractionModel::from_bath(const DiscreteBath& bath, std::size_t truncation) {
    InteractionModel m;
    m.truncation = truncation;
    for (const auto& mode : bath.modes) m.modes.push_back({mode.omega, std::sqrt(mode.weight) / 2.0});
    return m;
}

DiscreteBath InteractionModel::to_bath() const {
    DiscreteBath b;
    b.meta.rule = "explicit";
    b.meta.requested_modes = modes.size();
    for (const auto& m : modes) b.modes.push_back({m.omega, 4.0 * m.kappa * m.kappa});
    return b;
}

std::complex<double> branch_overlap(const FockBranches& b, double phase_minus, double phase_plus) {
    if (b.minus.size() != b.plus.size()) throw DomainError("branch states differ in size");
    std::complex<double> ov{};
    for (std::size_t i = 0; i < b.minus.size(); ++i) ov += std::conj(b.minus[i]) * b.plus[i];
    return ov * std::polar(1.0, phase_plus - phase_minus);
}

std::vector<FockResult> evolve_fock(const InteractionModel& model, const std::vector<double>& times, double ode_tol) {
    const Layout lay = make_layout(model);
    State x = vacuum(lay);
    std::vector<FockResult> out;
    double leakage = 0.0;
    std::size_t obs = 0;
    const bool skip_origin = times.empty() || times.front() > 0.0;
    const std::size_t steps = integrate(model, lay, x, times, ode_tol, [&](const State& s, double t) {
        leakage = std::max({leakage, top_level_population(s, lay, 0), top_level_population(s, lay, lay.dim)});
        if (skip_origin && obs++ == 0) return;
        out.push_back(summarise(s, lay, t, leakage));
    });
    for (auto& r : out) r.steps = steps;
    return out;
}

FockResult evolve_fock(const InteractionModel& model, double t, double ode_tol) {
    if (t == 0.0) {
        make_layout(model);
        return FockResult{};
    }
    return evolve_fock(model, std::vector<double>{t}, ode_tol).front();
}

FockBranches evolve_fock_branches(const InteractionModel& model, double t, double ode_tol) {
    const Layout lay = make_layout(model);
    State x = vacuum(lay);
    if (t > 0.0) {
        integrate(model, lay, x, std::vector<double>{t}, ode_tol, [](const State&, double) {});
    }
    return {State(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(lay.dim)),
            State(x.begin() + static_cast<std::ptrdiff_t>(lay.dim), x.end())};
}

}  // namespace acstark::bath
