#pragma once

#include <memory>
#include <ostream>

#include "acstark_cli/cli.hpp"
#include "common.hpp"

namespace acstark::cli {

class Command {
public:
    explicit Command(CLI::App* sub) : set(sub) {}
    virtual ~Command() = default;
    Command(const Command&) = delete;
    Command& operator=(const Command&) = delete;

    virtual int run(std::ostream& out, std::ostream& err) = 0;

    OptionSet set;
    CommonOptions common;
};

std::unique_ptr<Command> make_curve(CLI::App& root);
std::unique_ptr<Command> make_figure(CLI::App& root);
std::unique_ptr<Command> make_oracle(CLI::App& root);
std::unique_ptr<Command> make_compare(CLI::App& root);
std::unique_ptr<Command> make_classify(CLI::App& root);
std::unique_ptr<Command> make_sweep(CLI::App& root);

}  // namespace acstark::cli
