#include "steercomp/csv.hpp"

#include <charconv>
#include <system_error>

#include "steercomp/errors.hpp"

namespace steercomp::csv {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view field) {
    // Trim surrounding whitespace; to_chars output never contains any, but
    // hand-edited files may.
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
        field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
        field.remove_suffix(1);
    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw ConfigError("csv: cannot parse number '" + std::string(field) + "'");
    return value;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            std::string last = line.substr(start);
            if (!last.empty() && last.back() == '\r') last.pop_back();
            fields.push_back(std::move(last));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace steercomp::csv
