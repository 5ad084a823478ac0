#include "acstark/curve.hpp"

#include <cmath>

#include "acstark/dephasing.hpp"
#include "acstark/error.hpp"

namespace acstark {

std::vector<double> make_time_grid(double t_min, double t_max, std::size_t n, GridSpacing spacing) {
    if (n < 2) throw DomainError("time grid needs at least 2 points");
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
        throw DomainError("time grid needs finite t_min < t_max");
    }
    if (t_min < 0.0) throw DomainError("time grid must start at t >= 0");
    std::vector<double> grid(n);
    const double last = static_cast<double>(n - 1);
    if (spacing == GridSpacing::Linear) {
        for (std::size_t i = 0; i < n; ++i) {
            grid[i] = t_min + (t_max - t_min) * (static_cast<double>(i) / last);
        }
    } else {
        if (!(t_min > 0.0)) throw DomainError("log grid needs t_min > 0");
        const double lo = std::log(t_min);
        const double hi = std::log(t_max);
        for (std::size_t i = 0; i < n; ++i) {
            grid[i] = std::exp(lo + (hi - lo) * (static_cast<double>(i) / last));
        }
    }
    grid.front() = t_min;
    grid.back() = t_max;
    return grid;
}

std::string_view to_string(TimeUnit u) {
    switch (u) {
        case TimeUnit::Seconds: return "s";
        case TimeUnit::MarkovianTau: return "tau";
        case TimeUnit::AcTau: return "tau_ac";
    }
    return "tau";
}

DecoherenceCurve make_curve(std::vector<double> times, std::vector<double> gamma, CurveMeta meta) {
    if (times.size() != gamma.size()) throw DomainError("times and gamma must have equal length");
    DecoherenceCurve c;
    c.coherence.reserve(gamma.size());
    for (double g : gamma) c.coherence.push_back(coherence_from_gamma(g));
    c.times = std::move(times);
    c.gamma = std::move(gamma);
    c.meta = std::move(meta);
    check_invariants(c);
    return c;
}

void check_invariants(const DecoherenceCurve& c) {
    if (c.times.size() != c.gamma.size() || c.times.size() != c.coherence.size()) {
        throw ConsistencyError("curve columns have different lengths");
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0 && !(c.times[i] > c.times[i - 1])) throw ConsistencyError("curve times must increase");
        if (!(c.gamma[i] >= 0.0)) throw ConsistencyError("curve has negative gamma");
        if (std::abs(c.coherence[i] - coherence_from_gamma(c.gamma[i])) > 1e-14) {
            throw ConsistencyError("curve coherence disagrees with exp(-gamma)");
        }
    }
    if (!c.times.empty() && c.times.front() == 0.0 && c.gamma.front() != 0.0) {
        throw ConsistencyError("gamma(0) must vanish");
    }
}

DecoherenceCurve closed_form_curve(const DimensionlessParams& d, const std::vector<double>& times,
                                   TimeUnit unit) {
    validate(d);
    if (unit == TimeUnit::Seconds) throw DomainError("dimensionless curve needs a tau or tau_ac grid");
    if (unit == TimeUnit::AcTau && !(d.q > 0.0)) throw DomainError("tau_ac grid needs Q > 0");
    const double scale = unit == TimeUnit::AcTau ? d.q * d.q : 1.0;
    std::vector<double> gamma;
    gamma.reserve(times.size());
    for (double t : times) gamma.push_back(gamma_dimensionless(t * scale, d));
    return make_curve(times, std::move(gamma), CurveMeta{"closed_form", unit, d, std::nullopt});
}

DecoherenceCurve closed_form_curve(const PhysicalParams& p, const std::vector<double>& times) {
    validate(p);
    std::vector<double> gamma;
    gamma.reserve(times.size());
    for (double t : times) gamma.push_back(gamma_physical(t, p));
    std::optional<DimensionlessParams> d;
    if (gamma_markovian(p) > 0.0) d = DimensionlessParams::from_physical(p);
    return make_curve(times, std::move(gamma), CurveMeta{"closed_form", TimeUnit::Seconds, d, p});
}

}  // namespace acstark
