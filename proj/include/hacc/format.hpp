#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

#include "hacc/errors.hpp"

namespace hacc {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_full(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Report rendering: minimal digits, capped at 12 significant (0.5 stays
/// "0.5", one third becomes "0.333333333333").
inline std::string format_sig12(double v) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf, buf + len);
}

inline double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw error(errc::parse_error, "bad number '" + text + "' for " + what);
    return v;
}

inline long parse_integer(const std::string& text, const std::string& what) {
    long v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw error(errc::parse_error, "bad integer '" + text + "' for " + what);
    return v;
}

}  // namespace hacc
