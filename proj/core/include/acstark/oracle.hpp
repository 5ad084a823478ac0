#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "acstark/params.hpp"

namespace acstark::bath {

// Method names used in reports.
inline constexpr const char* kClosedForm = "closed_form";
inline constexpr const char* kFullLine = "full_line";
inline constexpr const char* kQuadrature = "quadrature";
inline constexpr const char* kQuadraturePositive = "quadrature_positive";
inline constexpr const char* kDiscrete = "discrete";
inline constexpr const char* kFock = "fock";
inline constexpr const char* kFockDiscrete = "fock_discrete";

struct OracleOptions {
    double quad_tol = 1e-10;
    std::size_t bath_modes = 0;          // 0: auto_bath_modes for the grid
    double bath_cutoff = 1000.0;
    bool positive_line = true;

    bool fock = true;
    std::size_t fock_modes = 2;          // reduced configuration, 1..3
    std::size_t fock_truncation = 12;
    double fock_max_occupation = 0.25;   // weights rescaled so w_k/ω_k² stays below this
    std::size_t fock_points = 6;         // grid points (subsampled) handed to the ODE
    double fock_tol = 1e-10;
};

struct MethodCurve {
    std::string method;
    std::vector<double> times;  // physical time [s]
    std::vector<double> gamma;
};

struct PairDeviation {
    std::string a;
    std::string b;
    double max_abs = 0.0;
    double max_rel = 0.0;  // |a-b|/max(|a|,|b|), points where both vanish skipped
};

struct OracleReport {
    PhysicalParams params;
    std::vector<double> grid;
    OracleOptions options;
    std::size_t bath_modes = 0;      // modes actually used by the discrete bath
    double fock_weight_scale = 1.0;  // rescaling applied to the reduced Fock bath
    std::vector<MethodCurve> curves;
    std::vector<PairDeviation> deviations;

    const MethodCurve* curve(const std::string& method) const;
    const PairDeviation* deviation(const std::string& a, const std::string& b) const;
};

inline constexpr std::size_t kMinBathModes = 20000;

// Mode count keeping the midpoint sum free of recurrences up to λt_max: the
// first alias of a grid with spacing h sits at λt = 2π/(hλ), so h is chosen
// with 2π/(hλ) >= λt_max + 40. Never below kMinBathModes.
std::size_t auto_bath_modes(double lambda_t_max, double cutoff_widths);

// Raised when one member of the cross-validation fails; names the method.
class OracleFailure : public std::runtime_error {
public:
    OracleFailure(std::string method, const std::string& what)
        : std::runtime_error(method + ": " + what), method_(std::move(method)) {}
    const std::string& method() const noexcept { return method_; }

private:
    std::string method_;
};

// Runs closed form, full-line closed form, quadrature (full and positive line)
// and the discretised bath on `grid` (physical seconds, increasing), plus the
// Fock ODE against the mode sum on a reduced 1-3 mode bath, and records every
// pairwise deviation between curves that share a time grid.
OracleReport cross_validate(const PhysicalParams& p, const std::vector<double>& grid, const OracleOptions& opts = {});

// Pairwise deviations recomputed from the stored curves.
std::vector<PairDeviation> compute_deviations(const std::vector<MethodCurve>& curves);

struct PairTolerance {
    std::string a;
    std::string b;
    double max_rel = 0.0;
};

struct ToleranceViolation {
    PairTolerance limit;
    double observed = 0.0;
};

// Default checks: the numerical routes against each other and against the
// closed form named by `reference` (kClosedForm or kFullLine).
std::vector<PairTolerance> default_tolerances(const std::string& reference = kClosedForm);

std::vector<ToleranceViolation> check_tolerances(const OracleReport& report, const std::vector<PairTolerance>& limits);

}  // namespace acstark::bath
