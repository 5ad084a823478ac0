#include "acstark_cli/cli.hpp"

#include <memory>

#include "acstark/bath.hpp"
#include "acstark/error.hpp"
#include "acstark/oracle.hpp"
#include "acstark/version.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace acstark::cli {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-Markovian ac Stark shift dephasing: curves, figures, oracles and comparisons", "acstark"};
    app.set_version_flag("--version", std::string(acstark::kVersion));
    app.require_subcommand(1);

    std::vector<std::unique_ptr<Command>> commands;
    commands.push_back(make_curve(app));
    commands.push_back(make_figure(app));
    commands.push_back(make_oracle(app));
    commands.push_back(make_compare(app));
    commands.push_back(make_classify(app));
    commands.push_back(make_sweep(app));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (auto& cmd : commands) {
            if (!cmd->set.app()->parsed()) continue;
            if (!cmd->common.config.empty()) apply_config(cmd->set.app(), read_config(cmd->common.config));
            return cmd->run(out, err);
        }
        err << "no subcommand given\n";
        return kBadInput;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << acstark::kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const bath::OracleFailure& e) {
        err << "oracle failure (" << e.method() << "): " << e.what() << '\n';
        return kToleranceViolation;
    } catch (const ConvergenceError& e) {
        err << "convergence failure: " << e.what() << '\n';
        return kToleranceViolation;
    } catch (const IntegrationError& e) {
        err << "integration failure at t=" << e.time() << ": " << e.what() << '\n';
        return kToleranceViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kToleranceViolation;
    }
}

}  // namespace acstark::cli
