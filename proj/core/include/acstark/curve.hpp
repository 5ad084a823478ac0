#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acstark/params.hpp"

namespace acstark {

enum class GridSpacing { Linear, Log };

// n >= 2 points from t_min to t_max inclusive. Log spacing needs t_min > 0.
std::vector<double> make_time_grid(double t_min, double t_max, std::size_t n,
                                   GridSpacing spacing = GridSpacing::Linear);

enum class TimeUnit {
    Seconds,       // physical time t
    MarkovianTau,  // τ = Γ_M t
    AcTau,         // τ' = Γ_ac t = τ/Q²
};

std::string_view to_string(TimeUnit u);

struct CurveMeta {
    std::string evaluator;  // "closed_form", "full_line", "quadrature", ...
    TimeUnit unit = TimeUnit::MarkovianTau;
    std::optional<DimensionlessParams> dimensionless;
    std::optional<PhysicalParams> physical;
};

struct DecoherenceCurve {
    std::vector<double> times;
    std::vector<double> gamma;
    std::vector<double> coherence;
    CurveMeta meta;

    std::size_t size() const { return times.size(); }
};

// Fills coherence = e^{-Γ} and checks the curve invariants.
DecoherenceCurve make_curve(std::vector<double> times, std::vector<double> gamma, CurveMeta meta);

// Throws ConsistencyError if times are not monotone, any Γ < 0, coherence
// disagrees with e^{-Γ} beyond 1e-14, or Γ(0) != 0.
void check_invariants(const DecoherenceCurve& c);

// Closed-form curve on a dimensionless grid. `unit` selects whether the grid is
// τ (MarkovianTau) or τ' (AcTau, Q > 0 required).
DecoherenceCurve closed_form_curve(const DimensionlessParams& d, const std::vector<double>& times,
                                   TimeUnit unit = TimeUnit::MarkovianTau);

// Closed-form curve on a grid of physical times [s].
DecoherenceCurve closed_form_curve(const PhysicalParams& p, const std::vector<double>& times);

}  // namespace acstark
