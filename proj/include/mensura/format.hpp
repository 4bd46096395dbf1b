#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace mensura {

// shortest representation that round-trips the double
inline std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// fixed 6-significant-digit form for human-facing text
inline std::string fmt_sig(double v, int significant = 6) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

}  // namespace mensura
