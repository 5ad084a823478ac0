#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acstark/curve.hpp"
#include "acstark/params.hpp"

namespace acstark::cli {

using nlohmann::json;

// Failure to read or write a file (exit 3).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad command-line or config input detected after parsing (exit 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Options registered on a subcommand, remembered with their bound variables so
// the resolved values can be written to the sidecar and replayed.
class OptionSet {
public:
    explicit OptionSet(CLI::App* sub) : sub_(sub) {}

    template <class T>
    CLI::Option* add(const std::string& names, T& var, const std::string& desc) {
        CLI::Option* opt = sub_->add_option(names, var, desc);
        const std::string key = opt->get_lnames().front();
        bound_.push_back({key, false, [&var] { return to_json(var); }});
        return opt;
    }

    CLI::Option* flag(const std::string& names, bool& var, const std::string& desc);

    // Resolved values keyed by long option name (unset optionals omitted).
    json values() const;

    // Argument list that re-creates this run: subcommand followed by every
    // resolved option.
    std::vector<std::string> reproduce() const;

    CLI::App* app() const { return sub_; }

private:
    template <class T>
    static json to_json(const T& v) {
        if constexpr (requires { v.has_value(); }) {
            return v ? json(*v) : json(nullptr);
        } else {
            return json(v);
        }
    }

    struct Bound {
        std::string key;
        bool is_flag;
        std::function<json()> get;
    };
    CLI::App* sub_;
    std::vector<Bound> bound_;
};

// Shared flags: --config, --output, --format.
struct CommonOptions {
    std::string config;
    std::string output;
    std::string format = "csv";
};

void add_common(OptionSet& set, CommonOptions& common, const std::string& default_output);

// Time grid options: --t-min, --t-max (alias --tau-max), --n-points, --spacing.
struct GridOptions {
    double t_min = 0.0;
    double t_max = 5.0;
    std::size_t n_points = 101;
    std::string spacing = "linear";

    std::vector<double> build() const;  // throws InputError
};

void add_grid(OptionSet& set, GridOptions& grid);

// Parameter input either dimensionless (--q, --r) or physical (rates in rad/s).
struct ParamOptions {
    std::optional<double> q;
    std::optional<double> r;
    std::optional<double> gamma_s;
    std::optional<double> omega_rabi;
    std::optional<double> detuning;
    std::optional<double> omega0;
    std::optional<double> linewidth;
    std::optional<double> dipole;
    std::optional<double> photon_density;

    bool physical() const;
    DimensionlessParams dimensionless() const;  // defaults q = 1, r = 1
    PhysicalParams resolve_physical() const;     // throws InputError / DomainError
};

void add_params(OptionSet& set, ParamOptions& p, bool with_qr = true);

// Output paths after applying kOutputDirEnv.
std::string resolve_output(const std::string& path);

std::string fmt17(double v);

}  // namespace acstark::cli
