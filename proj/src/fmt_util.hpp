#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace aggsim {

/// Shortest decimal form that parses back to the same double. Used in config
/// dumps so that round-trips are exact.
inline std::string fmt_shortest(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Fixed 9-significant-digit form used in CSV output.
inline std::string fmt_9g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace aggsim
