#include "acstark/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include "acstark/dephasing.hpp"
#include "acstark/error.hpp"

namespace acstark::bath {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

constexpr double kPeakHalfWidth = 5.0;
constexpr std::size_t kPeakPanels = 32;
constexpr double kTailPeriods = 25.0;  // tails start where s|x| >= this

struct Accumulator {
    double value = 0.0;
    double error = 0.0;
    std::size_t panels = 0;
};

// Smooth part of the kernel, 1/(x²((x-Q)²+1)).
double kernel(double x, double q) {
    const double d = x - q;
    return 1.0 / (x * x * (d * d + 1.0));
}

// (1 - cos xs)/(x²((x-Q)²+1)) written with sin² so it is exact at small xs.
double integrand(double x, double s, double q) {
    const double d = x - q;
    const double lor = 1.0 / (d * d + 1.0);
    if (x == 0.0) return s * s / 2.0 * lor;
    const double h = std::sin(x * s / 2.0) / x;
    return 2.0 * h * h * lor;
}

std::vector<double> finite_breakpoints(double lo, double hi, double q) {
    std::vector<double> pts{lo, hi};
    auto add = [&](double x) {
        if (x > lo && x < hi) pts.push_back(x);
    };
    add(0.0);
    for (double g = 1.0; g < std::max(std::abs(lo), std::abs(hi)); g *= 2.0) {
        add(g);
        add(-g);
        add(q + kPeakHalfWidth + g);
        add(q - kPeakHalfWidth - g);
    }
    for (std::size_t k = 0; k <= kPeakPanels; ++k) {
        add(q - kPeakHalfWidth + 2.0 * kPeakHalfWidth * static_cast<double>(k) / kPeakPanels);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Gauss-Kronrod on [a, b], handed to the rule already mapped onto [-1, 1]: the
// library's recursive error estimate is not rescaled by the half-width, which
// overstates it on narrow panels.
template <class F>
double mapped_panel(const F& f, double a, double b, const QuadratureOptions& opts, double& err) {
    const double mid = (a + b) / 2.0;
    const double half = (b - a) / 2.0;
    auto g = [&f, mid, half](double u) { return half * f(mid + half * u); };
    return Kronrod::integrate(g, -1.0, 1.0, opts.max_depth, opts.rel_tol, &err);
}

void integrate_finite(double lo, double hi, double s, double q, const QuadratureOptions& opts,
                      Accumulator& acc) {
    const double cap = std::numbers::pi / (4.0 * s);
    const auto pts = finite_breakpoints(lo, hi, q);
    auto f = [s, q](double x) { return integrand(x, s, q); };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i];
        const double b = pts[i + 1];
        const auto n = static_cast<std::size_t>(std::ceil((b - a) / cap));
        const std::size_t count = std::max<std::size_t>(n, 1);
        if (acc.panels + count > opts.max_panels) {
            throw ConvergenceError("quadrature panel budget exhausted", std::numeric_limits<double>::infinity());
        }
        const double width = (b - a) / static_cast<double>(count);
        for (std::size_t k = 0; k < count; ++k) {
            const double pa = a + width * static_cast<double>(k);
            const double pb = k + 1 == count ? b : pa + width;
            double err = 0.0;
            // the integrand is positive here, so per-panel relative tolerance carries over to the sum
            acc.value += mapped_panel(f, pa, pb, opts, err);
            acc.error += err;
        }
        acc.panels += count;
    }
}

// ∫_{|x| >= start} (1 - cos(s x)) k(x) dx on one side, with k(±(start + y)) given
// as `shifted(y)`. Rescaled to y = scale·u, where `scale` is the distance from
// the tail start to the nearest pole of k, so the rules always see a
// unit-scale function and the Fourier frequency is s·scale >= kTailPeriods.
// The smooth part changes shape again near the far pole (u ~ far/scale), so it
// is summed on doubling panels up to there before the mapped infinite panel.
template <class Shifted>
void integrate_tail(double start, double scale, double far, double s, Shifted shifted, const QuadratureOptions& opts,
                    Accumulator& acc) {
    auto unit = [scale, &shifted](double u) { return scale * shifted(scale * u); };
    double err = 0.0;
    double smooth = 0.0;
    double a = 0.0;
    const double split = far / scale;
    for (double b = 1.0; a < split; b *= 2.0) {
        const double hi = std::min(b, split);
        smooth += mapped_panel(unit, a, hi, opts, err);
        acc.error += err;
        ++acc.panels;
        a = hi;
    }
    // [a, ∞) onto [0, 1) by u = a(1 + v/(1 - v)), which keeps the decay scale a
    // in the middle of the panel
    auto folded = [&unit, a](double v) {
        if (v >= 1.0) return 0.0;
        const double w = 1.0 - v;
        return unit(a + a * v / w) * a / (w * w);
    };
    smooth += mapped_panel(folded, 0.0, 1.0, opts, err);
    acc.error += err;

    thread_local boost::math::quadrature::ooura_fourier_cos<double> cos_rule(1e-13);
    thread_local boost::math::quadrature::ooura_fourier_sin<double> sin_rule(1e-13);
    const double omega = s * scale;
    const double phase = s * start;
    // cos(s(start + y)) = cos(s start) cos(s y) - sin(s start) sin(s y)
    const auto [c_val, c_rel] = cos_rule.integrate(unit, omega);
    const auto [s_val, s_rel] = sin_rule.integrate(unit, omega);
    const double oscillatory = std::cos(phase) * c_val - std::sin(phase) * s_val;
    acc.error += std::abs(c_val) * c_rel + std::abs(s_val) * s_rel;

    acc.value += smooth - oscillatory;
    acc.panels += 2;
}

// J(s; Q) = ∫ (1 - cos xs)/(x²((x-Q)²+1)) dx, so that Γ = J/(πR).
Accumulator integrate_scaled(double s, double q, const QuadratureOptions& opts) {
    Accumulator acc;
    if (s == 0.0) return acc;
    const double zone = std::max(1.0, kTailPeriods / s);
    const double right = std::max(zone, q + std::max(kPeakHalfWidth, kTailPeriods / s));
    const bool full = opts.domain == FrequencyDomain::FullLine;
    const double left = full ? -zone : 0.0;

    integrate_finite(left, right, s, q, opts, acc);
    integrate_tail(right, std::min(right, right - q), std::max(right, right - q), s,
                   [right, q](double y) { return kernel(right + y, q); }, opts, acc);
    if (full) {
        // x = left - y, mirrored onto [0, ∞); cos is even so the rule is unchanged.
        const double start = -left;
        integrate_tail(start, start, start + q, s, [start, q](double y) { return kernel(-(start + y), q); }, opts,
                       acc);
    }
    return acc;
}

void check_tol(const QuadratureOptions& opts) {
    if (!(opts.rel_tol > 1e-14 && opts.rel_tol < 1e-3)) {
        throw DomainError("quadrature tolerance must lie in (1e-14, 1e-3)");
    }
}

QuadratureResult finish(const Accumulator& acc, double scale, const QuadratureOptions& opts) {
    QuadratureResult out{acc.value * scale, acc.error * std::abs(scale), acc.panels};
    const double achieved = out.value != 0.0 ? out.error_estimate / std::abs(out.value) : out.error_estimate;
    if (achieved > opts.rel_tol) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "quadrature did not reach rel_tol %.3e (achieved %.3e)", opts.rel_tol,
                      achieved);
        throw ConvergenceError(buf, achieved);
    }
    return out;
}

}  // namespace

QuadratureResult integrate_decoherence(double tau, const DimensionlessParams& d, const QuadratureOptions& opts) {
    validate(d);
    check_tol(opts);
    if (!(tau >= 0.0)) throw DomainError("tau must be non-negative");
    return finish(integrate_scaled(d.r * tau, d.q, opts), 1.0 / (std::numbers::pi * d.r), opts);
}

QuadratureResult integrate_decoherence(double t, const PhysicalParams& p, const QuadratureOptions& opts) {
    validate(p);
    check_tol(opts);
    if (!(t >= 0.0)) throw DomainError("t must be non-negative");
    const double gm = gamma_markovian(p);
    if (gm == 0.0) return {};
    const double q = p.omega0 / p.lambda_lw;
    return finish(integrate_scaled(p.lambda_lw * t, q, opts), gm / (std::numbers::pi * p.lambda_lw), opts);
}

double gamma_quadrature(double t, const PhysicalParams& p, double tol, FrequencyDomain domain) {
    QuadratureOptions opts;
    opts.rel_tol = tol;
    opts.domain = domain;
    return integrate_decoherence(t, p, opts).value;
}

}  // namespace acstark::bath
