#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tds {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

/// FNV-1a over a byte range, continuing from `state`.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = kFnvOffsetBasis) {
    for (unsigned char c : bytes) {
        state ^= static_cast<std::uint64_t>(c);
        state *= kFnvPrime;
    }
    return state;
}

/// FNV-1a over the 8 little-endian bytes of `value`.
inline std::uint64_t fnv1a64_u64(std::uint64_t value, std::uint64_t state = kFnvOffsetBasis) {
    for (int i = 0; i < 8; ++i) {
        state ^= (value >> (8 * i)) & 0xffu;
        state *= kFnvPrime;
    }
    return state;
}

/// Hex digest string of file/stream content, used in run reports.
inline std::string content_digest(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int i = 15; i >= 0; --i) {
        out.push_back(hex[(h >> (4 * i)) & 0xf]);
    }
    return out;
}

} // namespace tds
