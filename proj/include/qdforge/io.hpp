#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "qdforge/errors.hpp"

namespace qdforge {

/// Shortest decimal form that round-trips the exact double. All CSV and
/// JSON-lines output goes through this so file bytes are a pure function of
/// the computed values.
inline std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

inline double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("bad number '" + std::string(text) + "' in " + std::string(what));
    }
    return v;
}

inline std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("bad integer '" + std::string(text) + "' in " + std::string(what));
    }
    return v;
}

/// FNV-1a 64-bit; used for config hashes in run manifests.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

}  // namespace qdforge
