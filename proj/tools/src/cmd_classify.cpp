#include <cstdio>

#include "acstark/regime.hpp"
#include "commands.hpp"

namespace acstark::cli {

namespace {

class ClassifyCommand : public Command {
public:
    explicit ClassifyCommand(CLI::App& root)
        : Command(root.add_subcommand("classify", "Print the regime label for (Q, R)")) {
        set.add("--config", common.config, "key = value config file (flags take precedence)");
        add_params(set, params);
        set.add("--markov-q-max", th.markov_q_max, "Markovian: Q at most")->capture_default_str();
        set.add("--markov-r-min", th.markov_r_min, "Markovian: R at least")->capture_default_str();
        set.add("--suppressed-q-min", th.suppressed_q_min, "suppressed exponential: Q at least")->capture_default_str();
        set.add("--suppressed-rq2-min", th.suppressed_rq2_min, "suppressed exponential: RQ^2 at least")
            ->capture_default_str();
        set.add("--oscillatory-q-min", th.oscillatory_q_min, "oscillatory: Q at least")->capture_default_str();
        set.add("--oscillatory-rq2-min", th.oscillatory_rq2_min, "oscillatory: RQ^2 at least")->capture_default_str();
        set.add("--oscillatory-rq2-max", th.oscillatory_rq2_max, "oscillatory: RQ^2 at most")->capture_default_str();
    }

    int run(std::ostream& out, std::ostream&) override {
        const DimensionlessParams d =
            params.physical() ? DimensionlessParams::from_physical(params.resolve_physical()) : params.dimensionless();
        const RegimeLabel label = classify_regime(d, th);
        out << to_string(label.label) << '\n';
        char line[200];
        std::snprintf(line, sizeof line, "Q=%.17g R=%.17g RQ^2=%.17g RQ^3=%.17g\n", label.q, label.r, label.rq2,
                      label.rq3);
        out << line;
        return 0;
    }

private:
    ParamOptions params;
    RegimeThresholds th;
};

}  // namespace

std::unique_ptr<Command> make_classify(CLI::App& root) { return std::make_unique<ClassifyCommand>(root); }

}  // namespace acstark::cli
