#pragma once

#include <string>
#include <vector>

#include "CLI11.hpp"

namespace acstark::cli {

// One `key = value` line. Keys are option long names; '_' is accepted for '-'.
struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

// Parses `key = value` lines; '#' starts a comment, blank lines are skipped,
// values may be double-quoted. Throws IoError if unreadable, InputError on
// malformed or repeated keys.
std::vector<ConfigEntry> read_config(const std::string& path);

// Feeds entries into `sub` for every option not already given on the command
// line, so flags win over the file. Unknown keys throw InputError. List-valued
// options take comma or space separated values.
void apply_config(CLI::App* sub, const std::vector<ConfigEntry>& entries);

}  // namespace acstark::cli
