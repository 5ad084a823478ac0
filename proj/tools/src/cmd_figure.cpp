#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "acstark/curve.hpp"
#include "acstark/dephasing.hpp"
#include "acstark_cli/cli.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace acstark::cli {

namespace {

struct Panel {
    char name;
    double r;
    bool ac_units;
    std::vector<double> default_q;
};

// R is fixed per panel; the Q families are defaults, overridable with --q-values.
const std::vector<Panel>& panels() {
    static const std::vector<Panel> p{
        {'a', 100.0, false, {0.0, 1.0, 3.0, 10.0}},
        {'b', 0.01, false, {0.0, 1.0, 3.0, 10.0}},
        {'c', 0.01, true, {10.0, 30.0, 100.0}},
        {'d', 1e-5, true, {100.0, 1000.0}},
    };
    return p;
}

std::string q_label(double q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", q);
    return buf;
}

class FigureCommand : public Command {
public:
    explicit FigureCommand(CLI::App& root)
        : Command(root.add_subcommand("figure", "Curve families for the four decay panels (one CSV per Q)")) {
        set.add("--config", common.config, "key = value config file (flags take precedence)");
        set.add("--output-dir", output_dir, "directory for the panel files")->capture_default_str();
        set.add("--format", common.format, "csv (with JSON sidecar) or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        set.add("--panel", panel, "a, b, c, d or all")
            ->check(CLI::IsMember({"a", "b", "c", "d", "all"}))
            ->capture_default_str();
        set.add("--q-values", q_values, "override the Q family of the selected panel(s)");
        set.add("--t-max,--tau-max", t_max, "last time point, in the panel's time unit")->capture_default_str();
        set.add("--n-points", n_points, "points per curve")->capture_default_str();
    }

    int run(std::ostream& out, std::ostream&) override {
        if (n_points < 2) throw InputError("--n-points must be at least 2");
        if (!(t_max > 0.0)) throw InputError("--t-max must be positive");
        for (double q : q_values) {
            if (!(q >= 0.0) || !std::isfinite(q)) throw InputError("--q-values must be non-negative");
        }
        const auto times = make_time_grid(0.0, t_max, n_points);

        std::filesystem::path dir = output_dir;
        if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') dir = env;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

        json index = run_metadata(set);
        index["files"] = json::array();
        const std::string ext = common.format == "json" ? ".json" : ".csv";
        for (const auto& pn : panels()) {
            if (panel != "all" && panel[0] != pn.name) continue;
            const auto& family = q_values.empty() ? pn.default_q : q_values;
            for (double q : family) {
                if (pn.ac_units && !(q > 0.0)) throw InputError("panels c and d need Q > 0");
                const DimensionlessParams d{q, pn.r};
                const auto unit = pn.ac_units ? TimeUnit::AcTau : TimeUnit::MarkovianTau;
                const auto curve = closed_form_curve(d, times, unit);

                Table table;
                table.columns = {pn.ac_units ? "tau_ac" : "tau", "gamma", "coherence",
                                 pn.ac_units ? "ac_reference" : "markov_reference"};
                table.units = {pn.ac_units ? "Gamma_ac^-1" : "Gamma_M^-1", "1", "1", "1"};
                for (std::size_t i = 0; i < curve.size(); ++i) {
                    table.add_row({curve.times[i], curve.gamma[i], curve.coherence[i], std::exp(-curve.times[i])});
                }
                json meta = run_metadata(set);
                meta["panel"] = std::string(1, pn.name);
                meta["dimensionless"] = {{"q", q}, {"r", pn.r}, {"rq2", d.rq2()}};
                meta["evaluator"] = curve.meta.evaluator;
                meta["reference"] = pn.ac_units ? "exp(-tau_ac)" : "exp(-tau)";
                const std::string name = std::string("panel_") + pn.name + "_Q" + q_label(q) + ext;
                const auto files = emit_table((dir / name).string(), common.format, table, meta);
                for (const auto& f : files) {
                    out << "wrote " << f << '\n';
                    index["files"].push_back(std::filesystem::path(f).filename().string());
                }
            }
        }
        write_json((dir / "panel_index.json").string(), index);
        out << "wrote " << (dir / "panel_index.json").string() << '\n';
        return 0;
    }

private:
    std::string output_dir = "figures";
    std::string panel = "all";
    std::vector<double> q_values;
    double t_max = 5.0;
    std::size_t n_points = 201;
};

}  // namespace

std::unique_ptr<Command> make_figure(CLI::App& root) { return std::make_unique<FigureCommand>(root); }

}  // namespace acstark::cli
