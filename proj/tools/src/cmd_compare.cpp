#include <cmath>
#include <cstdio>

#include "acstark/dephasing.hpp"
#include "acstark/lindblad.hpp"
#include "acstark/vacchini.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace acstark::cli {

namespace {

class CompareCommand : public Command {
public:
    explicit CompareCommand(CLI::App& root)
        : Command(root.add_subcommand("compare", "Vacchini decay, weak-coupling overlay, naive rate table, Lindblad fit")) {
        add_common(set, common, "compare.csv");
        set.add("--lambda", lambda, "bath width lambda [rad/s]")->capture_default_str();
        set.add("--gamma-s", gamma_s, "spontaneous decay rate [rad/s]")->capture_default_str();
        set.add("--rho-ee0", rho_ee0, "initial excited population")->capture_default_str();
        set.add("--t-max", lt_max, "last point in units of 1/lambda")->capture_default_str();
        set.add("--n-points", n_points, "points on the population curve")->capture_default_str();
        set.add("--omega-rabi", omega_rabi, "Rabi frequency for the rate table [rad/s]")->capture_default_str();
        set.add("--detuning", detuning, "detuning for the rate table [rad/s]")->capture_default_str();
        set.add("--omega0", omega0, "laser centre frequency for the rate table [rad/s]")->capture_default_str();
        set.flag("--lindblad", lindblad, "also fit the three-level master-equation dephasing rate");
        set.add("--lb-omega-rabi", lb.omega_rabi, "Lindblad base Rabi frequency")->capture_default_str();
        set.add("--lb-detuning", lb.detuning, "Lindblad base detuning")->capture_default_str();
        set.add("--lb-gamma-s", lb.gamma_s, "Lindblad base decay rate")->capture_default_str();
        set.add("--lb-points", lb_points, "grid points per Lindblad fit")->capture_default_str();
    }

    int run(std::ostream& out, std::ostream& err) override {
        if (n_points < 2) throw InputError("--n-points must be at least 2");
        if (!(lt_max > 0.0)) throw InputError("--t-max must be positive");
        const auto v = compare::VacchiniParams::make(lambda, gamma_s);
        json meta = run_metadata(set);
        json warnings = json::array();

        Table table;
        table.columns = {"lambda_t", "t", "rho_ee", "weak_limit"};
        table.units = {"1", "s", "1", "1"};
        double max_rel = 0.0;
        bool in_regime = true;
        for (std::size_t i = 0; i < n_points; ++i) {
            const double lt = lt_max * static_cast<double>(i) / (n_points - 1);
            const double t = lt / lambda;
            const double exact = compare::vacchini_rho_ee(t, v, rho_ee0);
            const auto weak = compare::vacchini_weak_limit(t, v, rho_ee0);
            in_regime = weak.in_regime;
            if (exact != 0.0) max_rel = std::max(max_rel, std::abs(weak.value - exact) / std::abs(exact));
            table.add_row({lt, t, exact, weak.value});
        }
        if (!in_regime) {
            char w[160];
            std::snprintf(w, sizeof w, "gamma_s/lambda = %.3g exceeds %.3g; the weak-coupling overlay is outside its regime",
                          gamma_s / lambda, compare::kWeakCouplingMax);
            warnings.push_back(w);
        }
        meta["vacchini"] = {{"lambda", lambda},
                            {"gamma_s", gamma_s},
                            {"delta_re", v.delta.real()},
                            {"delta_im", v.delta.imag()},
                            {"omega_nm", compare::omega_nm(v)},
                            {"weak_limit_in_regime", in_regime},
                            {"weak_limit_max_rel_dev", max_rel}};

        // Rate table: the naive substitution Γ_s → λ against Γ_ac = Γ_M/Q².
        const double q = omega0 / lambda;
        json rows = json::array();
        out << "gamma_s/lambda   naive_rate         gamma_ac           naive/gamma_ac     Q^2\n";
        for (double ratio : {1e-3, 1e-1, 1.0}) {
            const double gs = ratio * lambda;
            const double naive = compare::naive_ac_rate(lambda, omega_rabi, detuning);
            const double gm = gamma_markovian(gs, omega_rabi, detuning);
            const double gac = gamma_ac(gm, q);
            rows.push_back({{"gamma_s", gs}, {"naive_rate", naive}, {"gamma_m", gm}, {"gamma_ac", gac},
                            {"naive_over_gamma_ac", naive / gac}, {"q_squared", q * q}});
            char line[200];
            std::snprintf(line, sizeof line, "%-16g %-18.10g %-18.10g %-18.10g %.10g\n", ratio, naive, gac, naive / gac,
                          q * q);
            out << line;
        }
        meta["rate_table"] = rows;

        if (lindblad) {
            const auto rep = compare::lindblad_scaling(lb, {1.0, 2.0, 4.0}, lb_points);
            json sweeps = json::array();
            for (const auto& s : rep.sweeps) {
                sweeps.push_back({{"parameter", s.parameter}, {"values", s.values}, {"rates", s.rates},
                                  {"exponent", s.exponent}});
                char line[160];
                std::snprintf(line, sizeof line, "lindblad rate exponent in %-10s %.6f\n", s.parameter.c_str(),
                              s.exponent);
                out << line;
            }
            meta["lindblad"] = {{"base", {{"omega_rabi", lb.omega_rabi}, {"detuning", lb.detuning}, {"gamma_s", lb.gamma_s}}},
                                {"rate", rep.base_fit.rate},
                                {"rate_over_gamma_m", rep.constant},
                                {"residual_rms", rep.base_fit.residual_rms},
                                {"decades", rep.base_fit.decades},
                                {"sweeps", sweeps}};
            if (rep.any_flag) warnings.push_back("a Lindblad fit was flagged (insufficient decay or non-exponential)");
            char line[120];
            std::snprintf(line, sizeof line, "lindblad rate / (gamma_s omega^2/delta^2) = %.6f\n", rep.constant);
            out << line;
        }

        for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << '\n';
        meta["warnings"] = warnings;
        const auto files = emit_table(resolve_output(common.output), common.format, table, meta);
        for (const auto& f : files) out << "wrote " << f << '\n';
        return 0;
    }

private:
    double lambda = 1.0;
    double gamma_s = 1e-3;
    double rho_ee0 = 1.0;
    double lt_max = 5.0;
    std::size_t n_points = 101;
    double omega_rabi = 1.0;
    double detuning = 10.0;
    double omega0 = 100.0;
    bool lindblad = false;
    compare::LindbladParams lb{1.0, 200.0, 1.0};
    std::size_t lb_points = 2001;
};

}  // namespace

std::unique_ptr<Command> make_compare(CLI::App& root) { return std::make_unique<CompareCommand>(root); }

}  // namespace acstark::cli
