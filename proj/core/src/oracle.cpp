#include "acstark/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "acstark/bath.hpp"
#include "acstark/dephasing.hpp"
#include "acstark/error.hpp"
#include "acstark/fock.hpp"
#include "acstark/quadrature.hpp"

namespace acstark::bath {

namespace {

template <class F>
MethodCurve run_method(const char* name, const std::vector<double>& times, F&& eval) {
    MethodCurve c{name, times, {}};
    c.gamma.reserve(times.size());
    try {
        for (double t : times) c.gamma.push_back(eval(t));
    } catch (const std::exception& e) {
        throw OracleFailure(name, e.what());
    }
    return c;
}

std::vector<double> subsample(const std::vector<double>& grid, std::size_t n) {
    if (grid.size() <= n) return grid;
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t idx = (i * (grid.size() - 1)) / (n - 1);
        if (out.empty() || grid[idx] != out.back()) out.push_back(grid[idx]);
    }
    return out;
}

PairDeviation compare(const MethodCurve& a, const MethodCurve& b) {
    PairDeviation d{a.method, b.method, 0.0, 0.0};
    for (std::size_t i = 0; i < a.gamma.size(); ++i) {
        const double diff = std::abs(a.gamma[i] - b.gamma[i]);
        const double scale = std::max(std::abs(a.gamma[i]), std::abs(b.gamma[i]));
        d.max_abs = std::max(d.max_abs, diff);
        if (scale > 0.0) d.max_rel = std::max(d.max_rel, diff / scale);
    }
    return d;
}

}  // namespace

const MethodCurve* OracleReport::curve(const std::string& method) const {
    for (const auto& c : curves) {
        if (c.method == method) return &c;
    }
    return nullptr;
}

const PairDeviation* OracleReport::deviation(const std::string& a, const std::string& b) const {
    for (const auto& d : deviations) {
        if ((d.a == a && d.b == b) || (d.a == b && d.b == a)) return &d;
    }
    return nullptr;
}

std::size_t auto_bath_modes(double lambda_t_max, double cutoff_widths) {
    if (!(lambda_t_max >= 0.0) || !(cutoff_widths > 0.0)) throw DomainError("auto_bath_modes needs t >= 0, cutoff > 0");
    const double n = std::ceil(2.0 * cutoff_widths * (lambda_t_max + 40.0) / kTwoPi);
    return std::max(kMinBathModes, static_cast<std::size_t>(n));
}

std::vector<PairDeviation> compute_deviations(const std::vector<MethodCurve>& curves) {
    std::vector<PairDeviation> out;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            if (curves[i].times != curves[j].times) continue;
            out.push_back(compare(curves[i], curves[j]));
        }
    }
    return out;
}

OracleReport cross_validate(const PhysicalParams& p, const std::vector<double>& grid, const OracleOptions& opts) {
    validate(p);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw DomainError("oracle grid must be non-negative and increasing");
        }
    }
    OracleReport rep;
    rep.params = p;
    rep.grid = grid;
    rep.options = opts;

    const double gm = gamma_markovian(p);
    std::optional<DimensionlessParams> d;
    if (gm > 0.0) d = DimensionlessParams::from_physical(p);

    rep.curves.push_back(run_method(kClosedForm, grid, [&](double t) { return gamma_physical(t, p); }));
    rep.curves.push_back(run_method(kFullLine, grid, [&](double t) {
        return d ? gamma_full_line(gm * t, *d) : 0.0;
    }));

    QuadratureOptions q;
    q.rel_tol = opts.quad_tol;
    rep.curves.push_back(run_method(kQuadrature, grid, [&](double t) { return integrate_decoherence(t, p, q).value; }));
    if (opts.positive_line) {
        QuadratureOptions qp = q;
        qp.domain = FrequencyDomain::PositiveLine;
        rep.curves.push_back(
            run_method(kQuadraturePositive, grid, [&](double t) { return integrate_decoherence(t, p, qp).value; }));
    }

    DiscreteBath bath;
    try {
        const double t_max = grid.empty() ? 0.0 : grid.back();
        rep.bath_modes = opts.bath_modes > 0 ? opts.bath_modes : auto_bath_modes(p.lambda_lw * t_max, opts.bath_cutoff);
        bath = sample_lorentzian_bath(p, rep.bath_modes, opts.bath_cutoff);
    } catch (const std::exception& e) {
        throw OracleFailure(kDiscrete, e.what());
    }
    rep.curves.push_back(run_method(kDiscrete, grid, [&](double t) { return gamma_discrete(t, bath); }));

    if (opts.fock) {
        if (opts.fock_modes < 1 || opts.fock_modes > 3) throw OracleFailure(kFock, "reduced bath needs 1-3 modes");
        DiscreteBath reduced;
        try {
            if (opts.fock_modes == 1) {
                // single mode at the line centre carrying the whole Lorentzian weight
                const double w0 = p.omega0 > 0.0 ? p.omega0 : p.lambda_lw;
                reduced.modes.push_back({w0, gamma_markovian(p) * p.lambda_lw});
            } else {
                reduced = sample_lorentzian_bath(p, opts.fock_modes, 10.0);
            }
        } catch (const std::exception& e) {
            throw OracleFailure(kFock, e.what());
        }
        // a mode's displacement stays below w/ω², and below w t²/4 at early times
        const double t_max = grid.empty() ? 0.0 : grid.back();
        double occ = 0.0;
        for (const auto& m : reduced.modes) {
            const double late = m.omega != 0.0 ? 1.0 / (m.omega * m.omega) : INFINITY;
            occ = std::max(occ, m.weight * std::min(late, t_max * t_max / 4.0));
        }
        rep.fock_weight_scale = occ > opts.fock_max_occupation ? opts.fock_max_occupation / occ : 1.0;
        for (auto& m : reduced.modes) m.weight *= rep.fock_weight_scale;

        const auto times = subsample(grid, opts.fock_points);
        const auto model = InteractionModel::from_bath(reduced, opts.fock_truncation);
        std::vector<FockResult> fock;
        try {
            std::vector<double> positive;
            for (double t : times) {
                if (t > 0.0) positive.push_back(t);
            }
            fock = evolve_fock(model, positive, opts.fock_tol);
        } catch (const std::exception& e) {
            throw OracleFailure(kFock, e.what());
        }
        MethodCurve fc{kFock, times, {}};
        std::size_t k = 0;
        for (double t : times) {
            if (t == 0.0) {
                fc.gamma.push_back(0.0);
                continue;
            }
            const auto& r = fock[k++];
            if (r.truncation_flag) {
                throw OracleFailure(kFock, "Fock truncation leakage " + std::to_string(r.leakage) + " above 1e-6");
            }
            fc.gamma.push_back(-std::log(r.coherence));
        }
        rep.curves.push_back(std::move(fc));
        rep.curves.push_back(run_method(kFockDiscrete, times, [&](double t) { return gamma_discrete(t, reduced); }));
    }

    rep.deviations = compute_deviations(rep.curves);
    return rep;
}

std::vector<PairTolerance> default_tolerances(const std::string& reference) {
    if (reference != kClosedForm && reference != kFullLine) {
        throw DomainError("reference must be closed_form or full_line");
    }
    return {
        {reference, kQuadrature, 1e-6},
        {reference, kDiscrete, 1e-3},
        {kQuadrature, kDiscrete, 1e-3},
        {kFock, kFockDiscrete, 1e-4},
    };
}

std::vector<ToleranceViolation> check_tolerances(const OracleReport& report, const std::vector<PairTolerance>& limits) {
    std::vector<ToleranceViolation> out;
    for (const auto& lim : limits) {
        const auto* dev = report.deviation(lim.a, lim.b);
        if (dev == nullptr) continue;
        // the Fock pair compares Γ = -ln|⟨ψ₋|ψ₊⟩|, so its absolute error is the
        // relative coherence error
        const double observed = lim.a == kFock || lim.b == kFock ? dev->max_abs : dev->max_rel;
        if (observed > lim.max_rel) out.push_back({lim, observed});
    }
    return out;
}

}  // namespace acstark::bath
