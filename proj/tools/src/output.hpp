#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace acstark::cli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::string> units;  // one per column
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
};

// Sidecar skeleton: tool, version, subcommand, resolved parameters and the
// argument list that reproduces the run.
json run_metadata(const OptionSet& set);

// CSV: single header row, 17 significant digits, '.' decimal separator.
void write_csv(const std::string& path, const Table& t);
void write_json(const std::string& path, const json& j);

// Writes `t` as CSV plus a JSON sidecar (same stem, .json), or as one JSON
// document holding both. Returns the files written. Throws IoError.
std::vector<std::string> emit_table(const std::string& path, const std::string& format, const Table& t, json meta);

std::string sidecar_path(const std::string& csv_path);

}  // namespace acstark::cli
