#include "output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "acstark/version.hpp"

namespace acstark::cli {

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
    rows.push_back(std::move(row));
}

json run_metadata(const OptionSet& set) {
    json meta;
    meta["tool"] = "acstark";
    meta["version"] = acstark::kVersion;
    meta["subcommand"] = set.app()->get_name();
    meta["parameters"] = set.values();
    meta["reproduce"] = set.reproduce();
    return meta;
}

void write_csv(const std::string& path, const Table& t) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    for (std::size_t i = 0; i < t.columns.size(); ++i) f << (i ? "," : "") << t.columns[i];
    f << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << fmt17(row[i]);
        f << '\n';
    }
    if (!f) throw IoError("write failed: " + path);
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << j.dump(2) << '\n';
    if (!f) throw IoError("write failed: " + path);
}

std::string sidecar_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".json");
    return p.string();
}

std::vector<std::string> emit_table(const std::string& path, const std::string& format, const Table& t, json meta) {
    meta["columns"] = t.columns;
    json units = json::object();
    for (std::size_t i = 0; i < t.columns.size() && i < t.units.size(); ++i) units[t.columns[i]] = t.units[i];
    meta["units"] = units;
    meta["rows"] = t.rows.size();
    if (format == "json") {
        json data = json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            json col = json::array();
            for (const auto& row : t.rows) col.push_back(row[c]);
            data[t.columns[c]] = col;
        }
        meta["data"] = data;
        write_json(path, meta);
        return {path};
    }
    const std::string side = sidecar_path(path);
    if (side == path) throw InputError("CSV output path must not end in .json");
    meta["data_file"] = std::filesystem::path(path).filename().string();
    write_csv(path, t);
    write_json(side, meta);
    return {path, side};
}

}  // namespace acstark::cli
