#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>

#include "acstark/dephasing.hpp"
#include "acstark/quadrature.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace acstark::cli {

namespace {

// Uniform double in [0, 1) from the top 53 bits; mt19937_64 output is fixed by
// the standard, so the sweep is reproducible across platforms.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
}

class SweepCommand : public Command {
public:
    explicit SweepCommand(CLI::App& root)
        : Command(root.add_subcommand("sweep", "Randomised (Q, R, tau) sweep: quadrature vs closed form, Q^2 identity")) {
        add_common(set, common, "sweep.csv");
        set.add("--seed", seed, "random seed")->capture_default_str();
        set.add("--count", count, "number of parameter sets")->capture_default_str();
        set.add("--q-min", q_min, "smallest Q (log-uniform)")->capture_default_str();
        set.add("--q-max", q_max, "largest Q")->capture_default_str();
        set.add("--r-min", r_min, "smallest R (log-uniform)")->capture_default_str();
        set.add("--r-max", r_max, "largest R")->capture_default_str();
        set.add("--tau-max", tau_max, "tau drawn uniformly from [0, tau-max]")->capture_default_str();
        set.add("--tol", tol, "max relative deviation, quadrature vs reference")->capture_default_str();
        set.add("--reference", reference, "closed_form or full_line")
            ->check(CLI::IsMember({"closed_form", "full_line"}))
            ->capture_default_str();
    }

    int run(std::ostream& out, std::ostream& err) override {
        if (!(q_min > 0.0 && q_min < q_max)) throw InputError("need 0 < --q-min < --q-max");
        if (!(r_min > 0.0 && r_min < r_max)) throw InputError("need 0 < --r-min < --r-max");
        if (!(tau_max > 0.0)) throw InputError("--tau-max must be positive");
        if (count == 0) throw InputError("--count must be positive");

        std::mt19937_64 rng(seed);
        Table table;
        table.columns = {"q", "r", "tau", "reference", "quadrature", "rel_dev", "q2_identity_rel_err"};
        table.units = {"1", "1", "Gamma_M^-1", "1", "1", "1", "1"};
        bath::QuadratureOptions qopts;
        qopts.rel_tol = std::min(1e-10, tol * 1e-2);
        std::size_t violations = 0;
        double worst = 0.0;
        double worst_q2 = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double q = log_uniform(rng, q_min, q_max);
            const double r = log_uniform(rng, r_min, r_max);
            const double tau = unit(rng) * tau_max;
            const DimensionlessParams d{q, r};
            const double ref = reference == "full_line" ? gamma_full_line(tau, d) : gamma_dimensionless(tau, d);
            const double quad = bath::integrate_decoherence(tau, d, qopts).value;
            const double scale = std::max(std::abs(ref), std::abs(quad));
            const double rel = scale > 0.0 ? std::abs(quad - ref) / scale : 0.0;
            // Γ_M/Γ_ac = Q² with Γ_M drawn from the same stream
            const double gm = log_uniform(rng, 1e-3, 1e9);
            const double q2_err = std::abs(gm / gamma_ac(gm, q) - q * q) / (q * q);
            if (rel > tol) ++violations;
            worst = std::max(worst, rel);
            worst_q2 = std::max(worst_q2, q2_err);
            table.add_row({q, r, tau, ref, quad, rel, q2_err});
        }
        json meta = run_metadata(set);
        meta["reference"] = reference;
        meta["max_rel_dev"] = worst;
        meta["max_q2_identity_rel_err"] = worst_q2;
        meta["violations"] = violations;
        const auto files = emit_table(resolve_output(common.output), common.format, table, meta);
        char line[200];
        std::snprintf(line, sizeof line, "max relative deviation quadrature vs %s: %.3e (limit %.1e), %zu violation(s)\n",
                      reference.c_str(), worst, tol, violations);
        out << line;
        std::snprintf(line, sizeof line, "max Q^2 identity error: %.3e\n", worst_q2);
        out << line;
        for (const auto& f : files) out << "wrote " << f << '\n';
        if (violations > 0) {
            err << violations << " parameter set(s) exceed the tolerance\n";
            return kToleranceViolation;
        }
        return 0;
    }

private:
    std::uint64_t seed = 1;
    std::size_t count = 200;
    double q_min = 1e-3;
    double q_max = 1e3;
    double r_min = 1e-5;
    double r_max = 100.0;
    double tau_max = 10.0;
    double tol = 1e-6;
    std::string reference = "closed_form";
};

}  // namespace

std::unique_ptr<Command> make_sweep(CLI::App& root) { return std::make_unique<SweepCommand>(root); }

}  // namespace acstark::cli
