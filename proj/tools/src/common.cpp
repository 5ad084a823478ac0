#include "common.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "acstark/units.hpp"
#include "acstark_cli/cli.hpp"

namespace acstark::cli {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CLI::Option* OptionSet::flag(const std::string& names, bool& var, const std::string& desc) {
    CLI::Option* opt = sub_->add_flag(names, var, desc);
    bound_.push_back({opt->get_lnames().front(), true, [&var] { return json(var); }});
    return opt;
}

json OptionSet::values() const {
    json out = json::object();
    for (const auto& b : bound_) {
        auto v = b.get();
        if (!v.is_null()) out[b.key] = v;
    }
    return out;
}

std::vector<std::string> OptionSet::reproduce() const {
    std::vector<std::string> out{sub_->get_name()};
    auto scalar = [](const json& v) -> std::string {
        if (v.is_number_float()) return fmt17(v.get<double>());
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    for (const auto& b : bound_) {
        if (b.key == "config" || b.key == "output" || b.key == "output-dir") continue;
        const json v = b.get();
        if (v.is_null()) continue;
        if (b.is_flag) {
            if (v.get<bool>()) out.push_back("--" + b.key);
            continue;
        }
        if (v.is_array()) {
            if (v.empty()) continue;
            out.push_back("--" + b.key);
            for (const auto& e : v) out.push_back(scalar(e));
            continue;
        }
        out.push_back("--" + b.key);
        out.push_back(scalar(v));
    }
    return out;
}

void add_common(OptionSet& set, CommonOptions& common, const std::string& default_output) {
    common.output = default_output;
    set.add("--config", common.config, "key = value config file (flags take precedence)");
    set.add("-o,--output", common.output, "output file")->capture_default_str();
    set.add("--format", common.format, "csv (with JSON sidecar) or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

std::vector<double> GridOptions::build() const {
    if (n_points < 2) throw InputError("--n-points must be at least 2");
    if (!(t_min < t_max)) throw InputError("--t-min must be below --t-max");
    if (t_min < 0.0) throw InputError("--t-min must be non-negative");
    if (spacing == "log" && !(t_min > 0.0)) throw InputError("log spacing needs --t-min > 0");
    return make_time_grid(t_min, t_max, n_points, spacing == "log" ? GridSpacing::Log : GridSpacing::Linear);
}

void add_grid(OptionSet& set, GridOptions& grid) {
    set.add("--t-min", grid.t_min, "first time point")->capture_default_str();
    set.add("--t-max,--tau-max", grid.t_max, "last time point")->capture_default_str();
    set.add("--n-points", grid.n_points, "number of time points")->capture_default_str();
    set.add("--spacing", grid.spacing, "linear or log")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
}

bool ParamOptions::physical() const {
    return gamma_s || omega_rabi || detuning || omega0 || linewidth || dipole || photon_density;
}

DimensionlessParams ParamOptions::dimensionless() const {
    DimensionlessParams d{q.value_or(1.0), r.value_or(1.0)};
    validate(d);
    return d;
}

PhysicalParams ParamOptions::resolve_physical() const {
    if (q || r) throw InputError("give either --q/--r or physical parameters, not both");
    auto need = [](const std::optional<double>& v, const char* name) {
        if (!v) throw InputError(std::string("physical input needs --") + name);
        return *v;
    };
    if (dipole) {
        if (gamma_s) throw InputError("--gamma-s is derived from --dipole; give one of them");
        units::DipoleAtom atom{*dipole, need(omega0, "omega0")};
        units::Drive drive;
        drive.linewidth = need(linewidth, "linewidth");
        drive.detuning = need(detuning, "detuning");
        drive.omega_rabi = omega_rabi;
        drive.photon_density = photon_density;
        return units::lab_to_params(atom, drive);
    }
    if (photon_density) throw InputError("--photon-density needs --dipole");
    PhysicalParams p;
    p.gamma_s = need(gamma_s, "gamma-s");
    p.omega_rabi = need(omega_rabi, "omega-rabi");
    p.detuning = need(detuning, "detuning");
    p.omega0 = need(omega0, "omega0");
    p.lambda_lw = need(linewidth, "linewidth");
    validate(p);
    return p;
}

void add_params(OptionSet& set, ParamOptions& p, bool with_qr) {
    if (with_qr) {
        set.add("--q", p.q, "Q = omega0/lambda (default 1)");
        set.add("--r", p.r, "R = lambda/Gamma_M (default 1)");
    }
    set.add("--gamma-s", p.gamma_s, "spontaneous decay rate [rad/s]");
    set.add("--omega-rabi", p.omega_rabi, "Rabi frequency [rad/s]");
    set.add("--detuning", p.detuning, "detuning [rad/s]");
    set.add("--omega0", p.omega0, "laser centre frequency [rad/s]");
    set.add("--linewidth", p.linewidth, "Lorentzian HWHM lambda [rad/s]");
    set.add("--dipole", p.dipole, "transition dipole |d| [C m]; derives gamma-s");
    set.add("--photon-density", p.photon_density, "peak photon density |alpha0|^2/V [1/m^3]");
}

std::string resolve_output(const std::string& path) {
    const char* dir = std::getenv(kOutputDirEnv);
    if (dir == nullptr || *dir == '\0') return path;
    return (std::filesystem::path(dir) / std::filesystem::path(path).filename()).string();
}

}  // namespace acstark::cli
