#pragma once

// Command-line front end. `run` parses the arguments (without the program
// name), writes results to `out` and diagnostics to `err`, and returns the
// exit code: 0 when every check passes, 1 on a failed check, 2 on a usage or
// parse error.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qlsa::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding the shipped algebra files.
std::filesystem::path default_data_dir();

/// The full verification report; deterministic apart from the optional
/// timestamp line in text form. Returns the exit code.
int write_full_report(const std::filesystem::path& data_dir, bool json, bool timestamp, std::ostream& out);

}  // namespace qlsa::cli
