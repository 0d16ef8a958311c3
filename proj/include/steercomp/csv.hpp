#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace steercomp::csv {

// Shortest decimal representation that round-trips the exact double value.
std::string format_double(double value);

// Strict double parser; throws ConfigError on trailing garbage or empty fields.
double parse_double(std::string_view field);

std::vector<std::string> split_row(const std::string& line);

}  // namespace steercomp::csv
