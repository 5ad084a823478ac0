#include <cmath>

#include "acstark/bath.hpp"
#include "acstark/dephasing.hpp"
#include "acstark/oracle.hpp"
#include "acstark/quadrature.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace acstark::cli {

namespace {

class CurveCommand : public Command {
public:
    explicit CurveCommand(CLI::App& root)
        : Command(root.add_subcommand("curve", "Decoherence curve Gamma(t) and coherence e^-Gamma on a time grid")) {
        add_common(set, common, "curve.csv");
        add_params(set, params);
        add_grid(set, grid);
        set.add("--evaluator", evaluator, "closed_form, full_line, quadrature, quadrature_positive, discrete, large_q")
            ->check(CLI::IsMember({"closed_form", "full_line", "quadrature", "quadrature_positive", "discrete", "large_q"}))
            ->capture_default_str();
        set.add("--rescale", rescale, "none (tau = Gamma_M t) or ac (tau' = Gamma_ac t)")
            ->check(CLI::IsMember({"none", "ac"}))
            ->capture_default_str();
        set.add("--tol", tol, "quadrature relative tolerance")->capture_default_str();
        set.add("--n-modes", n_modes, "discrete bath modes (0: automatic)")->capture_default_str();
        set.add("--cutoff", cutoff, "discrete bath half-width in units of lambda")->capture_default_str();
    }

    int run(std::ostream& out, std::ostream& err) override {
        const auto times = grid.build();
        json meta = run_metadata(set);
        json warnings = json::array();

        // Everything is evaluated at τ = Γ_M t on a dimensionless (Q, R).
        DimensionlessParams d;
        double to_tau = 1.0;  // grid value → τ
        std::string time_col = "tau";
        std::string time_unit = "Gamma_M^-1";
        if (params.physical()) {
            if (rescale != "none") throw InputError("--rescale ac applies to dimensionless input only");
            const PhysicalParams p = params.resolve_physical();
            for (const auto& w : acstark::warnings(p)) warnings.push_back(w);
            d = DimensionlessParams::from_physical(p);
            to_tau = gamma_markovian(p);
            time_col = "t";
            time_unit = "s";
            meta["physical"] = {{"gamma_s", p.gamma_s},     {"omega_rabi", p.omega_rabi}, {"detuning", p.detuning},
                                {"omega0", p.omega0},       {"lambda", p.lambda_lw},      {"alpha0_sq", p.alpha0_sq},
                                {"gamma_m", gamma_markovian(p)}};
        } else {
            d = params.dimensionless();
            if (rescale == "ac") {
                if (!(d.q > 0.0)) throw InputError("--rescale ac needs Q > 0");
                to_tau = d.q * d.q;
                time_col = "tau_ac";
                time_unit = "Gamma_ac^-1";
            }
        }
        if (evaluator == "large_q" && (params.physical() || rescale != "ac")) {
            throw InputError("--evaluator large_q is defined in tau' units; use --rescale ac");
        }
        meta["dimensionless"] = {{"q", d.q}, {"r", d.r}, {"rq2", d.rq2()}};
        meta["evaluator"] = evaluator;

        // Discrete bath lives in units where Γ_M = 1: λ = R, ω₀ = QR.
        const PhysicalParams unit_params{1.0, 1.0, 1.0, d.q * d.r, d.r, 0.0};
        bath::DiscreteBath discrete;
        if (evaluator == "discrete") {
            const std::size_t n = n_modes > 0 ? n_modes : bath::auto_bath_modes(d.r * times.back() * to_tau, cutoff);
            discrete = bath::sample_lorentzian_bath(unit_params, n, cutoff);
            meta["bath_modes"] = n;
        }
        bath::QuadratureOptions qopts;
        qopts.rel_tol = tol;
        if (evaluator == "quadrature_positive") qopts.domain = bath::FrequencyDomain::PositiveLine;

        Table table;
        table.columns = {time_col, "gamma", "coherence"};
        table.units = {time_unit, "1", "1"};
        for (double t : times) {
            const double tau = t * to_tau;
            double g = 0.0;
            if (evaluator == "closed_form") {
                g = gamma_dimensionless(tau, d);
            } else if (evaluator == "full_line") {
                g = gamma_full_line(tau, d);
            } else if (evaluator == "quadrature" || evaluator == "quadrature_positive") {
                g = bath::integrate_decoherence(tau, d, qopts).value;
            } else if (evaluator == "discrete") {
                g = bath::gamma_discrete(tau, discrete);
            } else {
                g = gamma_large_q_approx(t, d);
            }
            table.add_row({t, g, coherence_from_gamma(g)});
        }
        for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << '\n';
        meta["warnings"] = warnings;
        const auto files = emit_table(resolve_output(common.output), common.format, table, meta);
        for (const auto& f : files) out << "wrote " << f << '\n';
        return 0;
    }

private:
    ParamOptions params;
    GridOptions grid;
    std::string evaluator = "closed_form";
    std::string rescale = "none";
    double tol = 1e-10;
    std::size_t n_modes = 0;
    double cutoff = 1000.0;
};

}  // namespace

std::unique_ptr<Command> make_curve(CLI::App& root) { return std::make_unique<CurveCommand>(root); }

}  // namespace acstark::cli
