#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "common.hpp"

namespace acstark::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : v) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

std::vector<ConfigEntry> read_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read config file " + path);
    std::vector<ConfigEntry> out;
    std::set<std::string> seen;
    std::string raw;
    int lineno = 0;
    while (std::getline(f, raw)) {
        ++lineno;
        std::string line = raw;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InputError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        ConfigEntry e;
        e.key = trim(line.substr(0, eq));
        e.value = trim(line.substr(eq + 1));
        e.line = lineno;
        for (auto& c : e.key) {
            if (c == '_') c = '-';
        }
        if (e.value.size() >= 2 && e.value.front() == '"' && e.value.back() == '"') {
            e.value = e.value.substr(1, e.value.size() - 2);
        }
        if (e.key.empty()) throw InputError(path + ":" + std::to_string(lineno) + ": empty key");
        if (!seen.insert(e.key).second) {
            throw InputError(path + ":" + std::to_string(lineno) + ": key '" + e.key + "' repeated");
        }
        out.push_back(std::move(e));
    }
    return out;
}

void apply_config(CLI::App* sub, const std::vector<ConfigEntry>& entries) {
    for (const auto& e : entries) {
        CLI::Option* opt = e.key == "config" ? nullptr : sub->get_option_no_throw("--" + e.key);
        if (opt == nullptr) {
            throw InputError("config line " + std::to_string(e.line) + ": unknown key '" + e.key + "' for " +
                             sub->get_name());
        }
        if (opt->count() > 0) continue;
        if (opt->get_items_expected_max() > 1) {
            for (const auto& v : split_list(e.value)) opt->add_result(v);
        } else {
            opt->add_result(e.value);
        }
        opt->run_callback();
    }
}

}  // namespace acstark::cli
