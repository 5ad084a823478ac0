#include "acstark/bath.hpp"

#include <cmath>
#include <numbers>

#include "acstark/dephasing.hpp"
#include "acstark/error.hpp"

namespace acstark::bath {

std::string to_string(FrequencyDomain d) {
    return d == FrequencyDomain::FullLine ? "full_line" : "positive_line";
}

double DiscreteBath::total_weight() const {
    long double sum = 0.0L;
    for (const auto& m : modes) sum += m.weight;
    return static_cast<double>(sum);
}

DiscreteBath sample_lorentzian_bath(const PhysicalParams& p, std::size_t n_modes, double cutoff_widths,
                                    FrequencyDomain domain) {
    validate(p);
    if (n_modes < 2) throw DomainError("bath needs at least 2 modes");
    if (!(cutoff_widths >= 10.0) || !std::isfinite(cutoff_widths)) {
        throw DomainError("cutoff_widths must be at least 10");
    }
    double lo = p.omega0 - cutoff_widths * p.lambda_lw;
    const double hi = p.omega0 + cutoff_widths * p.lambda_lw;
    if (domain == FrequencyDomain::PositiveLine) lo = std::max(lo, 0.0);

    const double dw = (hi - lo) / static_cast<double>(n_modes);
    const double prefactor = gamma_markovian(p) * p.lambda_lw * p.lambda_lw / std::numbers::pi;

    DiscreteBath bath;
    bath.meta = SamplingMeta{"midpoint", domain, lo, hi, dw, cutoff_widths, n_modes, 0};
    bath.modes.reserve(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        double w = lo + (static_cast<double>(k) + 0.5) * dw;
        const double detune = w - p.omega0;
        const double weight = prefactor * dw / (detune * detune + p.lambda_lw * p.lambda_lw);
        // a node on the origin keeps its weight: (1 - cos ωt)/ω² → t²/2 there
        if (std::abs(w) < 1e-9 * dw) {
            w = 0.0;
            ++bath.meta.zero_nodes;
        }
        bath.modes.push_back({w, weight});
    }
    return bath;
}

double gamma_discrete(double t, const DiscreteBath& bath) {
    if (!(t >= 0.0)) throw DomainError("t must be non-negative");
    long double sum = 0.0L;
    for (const auto& m : bath.modes) {
        if (m.omega == 0.0) {
            sum += m.weight * t * t / 2.0;
            continue;
        }
        const double half = std::sin(m.omega * t / 2.0) / m.omega;
        sum += 2.0L * m.weight * half * half;
    }
    return static_cast<double>(sum);
}

double phase_phi(double t, const DiscreteBath& bath) {
    long double sum = 0.0L;
    for (const auto& m : bath.modes) sum += m.weight / 4.0 * std::sin(m.omega * t);
    return static_cast<double>(sum);
}

double global_phase(double t, const DiscreteBath& bath) {
    long double sum = 0.0L;
    for (const auto& m : bath.modes) {
        const double x = m.omega * t;
        double term;
        if (std::abs(x) < 1e-3) {
            // (t - sin(ωt)/ω)/ω = ω t³/6 (1 - x²/20 + x⁴/840)
            term = m.omega * t * t * t / 6.0 * (1.0 - x * x / 20.0 * (1.0 - x * x / 42.0));
        } else {
            term = (t - std::sin(x) / m.omega) / m.omega;
        }
        sum += m.weight / 4.0 * term;
    }
    return static_cast<double>(sum);
}

}  // namespace acstark::bath
