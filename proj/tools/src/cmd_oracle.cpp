#include <cstdio>

#include "acstark/dephasing.hpp"
#include "acstark/oracle.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace acstark::cli {

namespace {

class OracleCommand : public Command {
public:
    explicit OracleCommand(CLI::App& root)
        : Command(root.add_subcommand("oracle", "Cross-validate closed forms, quadrature, discrete bath and Fock ODE")) {
        add_common(set, common, "oracle.csv");
        set.add("--q", q_values, "Q values (Cartesian product with --r)")->capture_default_str();
        set.add("--r", r_values, "R values")->capture_default_str();
        add_params(set, params, false);
        grid.n_points = 50;
        add_grid(set, grid);
        set.add("--times", times, "explicit time points (overrides the grid)");
        set.add("--reference", reference, "closed form the numerical routes are held to: closed_form or full_line")
            ->check(CLI::IsMember({"closed_form", "full_line"}))
            ->capture_default_str();
        set.add("--n-modes", opts.bath_modes, "discrete bath modes (0: automatic)")->capture_default_str();
        set.add("--cutoff", opts.bath_cutoff, "discrete bath half-width in units of lambda")->capture_default_str();
        set.add("--quad-tol", opts.quad_tol, "quadrature relative tolerance")->capture_default_str();
        set.add("--fock-modes", opts.fock_modes, "modes in the reduced Fock bath (1-3)")->capture_default_str();
        set.add("--fock-truncation", opts.fock_truncation, "Fock levels per mode")->capture_default_str();
        set.flag("--no-fock", no_fock, "skip the Fock ODE oracle");
        set.flag("--no-positive", no_positive, "skip the positive-frequency quadrature");
        set.add("--tol-quadrature", tol_quadrature, "max relative deviation, reference vs quadrature")
            ->capture_default_str();
        set.add("--tol-discrete", tol_discrete, "max relative deviation of the discrete bath")->capture_default_str();
        set.add("--tol-fock", tol_fock, "max |Gamma| deviation, Fock ODE vs mode sum")->capture_default_str();
    }

    int run(std::ostream& out, std::ostream& err) override {
        std::vector<double> grid_times = times.empty() ? grid.build() : times;
        for (std::size_t i = 0; i < grid_times.size(); ++i) {
            if (!(grid_times[i] >= 0.0) || (i > 0 && !(grid_times[i] > grid_times[i - 1]))) {
                throw InputError("--times must be non-negative and increasing");
            }
        }
        opts.fock = !no_fock;
        opts.positive_line = !no_positive;

        std::vector<bath::PairTolerance> limits{
            {reference, bath::kQuadrature, tol_quadrature},
            {reference, bath::kDiscrete, tol_discrete},
            {bath::kQuadrature, bath::kDiscrete, tol_discrete},
            {bath::kFock, bath::kFockDiscrete, tol_fock},
        };

        std::vector<std::pair<PhysicalParams, DimensionlessParams>> sets;
        if (params.physical()) {
            const PhysicalParams p = params.resolve_physical();
            sets.emplace_back(p, DimensionlessParams::from_physical(p));
        } else {
            for (double q : q_values) {
                for (double r : r_values) {
                    const DimensionlessParams d{q, r};
                    validate(d);
                    // units with Γ_M = 1, so t is τ
                    sets.emplace_back(PhysicalParams{1.0, 1.0, 1.0, q * r, r, 0.0}, d);
                }
            }
        }

        json meta = run_metadata(set);
        meta["reference"] = reference;
        meta["tolerances"] = json::array();
        for (const auto& l : limits) {
            meta["tolerances"].push_back({{"a", l.a}, {"b", l.b}, {"limit", l.max_rel},
                                          {"metric", l.a == bath::kFock ? "max_abs" : "max_rel"}});
        }
        meta["runs"] = json::array();

        Table table;
        table.columns = {"q", "r", params.physical() ? "t" : "tau", bath::kClosedForm, bath::kFullLine,
                         bath::kQuadrature};
        if (opts.positive_line) table.columns.push_back(bath::kQuadraturePositive);
        table.columns.push_back(bath::kDiscrete);
        table.units.assign(table.columns.size(), "1");
        table.units[2] = params.physical() ? "s" : "Gamma_M^-1";

        std::size_t failures = 0;
        for (const auto& [p, d] : sets) {
            const auto rep = bath::cross_validate(p, grid_times, opts);
            const auto violations = bath::check_tolerances(rep, limits);
            failures += violations.size();

            for (std::size_t i = 0; i < grid_times.size(); ++i) {
                std::vector<double> row{d.q, d.r, grid_times[i]};
                for (std::size_t c = 3; c < table.columns.size(); ++c) {
                    row.push_back(rep.curve(table.columns[c])->gamma[i]);
                }
                table.add_row(std::move(row));
            }

            json run{{"q", d.q}, {"r", d.r}, {"bath_modes", rep.bath_modes},
                     {"fock_weight_scale", rep.fock_weight_scale}};
            run["deviations"] = json::array();
            for (const auto& dev : rep.deviations) {
                run["deviations"].push_back({{"a", dev.a}, {"b", dev.b}, {"max_abs", dev.max_abs},
                                             {"max_rel", dev.max_rel}});
            }
            run["violations"] = json::array();
            for (const auto& v : violations) {
                run["violations"].push_back({{"a", v.limit.a}, {"b", v.limit.b}, {"limit", v.limit.max_rel},
                                             {"observed", v.observed}});
            }
            if (const auto* fc = rep.curve(bath::kFock)) {
                run["fock"] = {{"times", fc->times},
                               {"gamma_fock", fc->gamma},
                               {"gamma_mode_sum", rep.curve(bath::kFockDiscrete)->gamma}};
            }
            meta["runs"].push_back(run);

            for (const auto& l : limits) {
                const auto* dev = rep.deviation(l.a, l.b);
                if (dev == nullptr) continue;
                const double observed = l.a == bath::kFock ? dev->max_abs : dev->max_rel;
                char line[256];
                std::snprintf(line, sizeof line, "Q=%-8g R=%-8g %-12s vs %-14s %.3e (limit %.1e) %s\n", d.q, d.r,
                              l.a.c_str(), l.b.c_str(), observed, l.max_rel,
                              observed <= l.max_rel ? "ok" : "EXCEEDED");
                out << line;
            }
        }
        meta["status"] = failures == 0 ? "pass" : "fail";
        const auto files = emit_table(resolve_output(common.output), common.format, table, meta);
        for (const auto& f : files) out << "wrote " << f << '\n';
        if (failures > 0) {
            err << failures << " tolerance violation(s); see " << files.back() << '\n';
            return kToleranceViolation;
        }
        return 0;
    }

private:
    ParamOptions params;
    GridOptions grid;
    std::vector<double> q_values{0.001, 1.0, 10.0, 100.0};
    std::vector<double> r_values{1e-5, 0.01, 100.0};
    std::vector<double> times;
    std::string reference = bath::kClosedForm;
    bath::OracleOptions opts;
    bool no_fock = false;
    bool no_positive = false;
    double tol_quadrature = 1e-6;
    double tol_discrete = 1e-3;
    double tol_fock = 1e-4;
};

}  // namespace

std::unique_ptr<Command> make_oracle(CLI::App& root) { return std::make_unique<OracleCommand>(root); }

}  // namespace acstark::cli
