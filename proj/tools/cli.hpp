#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quantplan::cli {

/// Parses "9.12khz", "500kHz", "2MHz", "4000" (bare numbers are Hz).
/// Throws quantplan::InvalidArgument on malformed or negative input.
double parse_frequency(std::string_view text);

/// Parses an inclusive integer range "LO..HI".
std::pair<int, int> parse_range(std::string_view text);

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 1 when the problem is infeasible, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quantplan::cli
